#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cwdc/rational.hpp"

namespace cwdc {

// C(n, k) as an exact big integer; analysis formulas use this at any n.
mpz_class binomial_mpz(unsigned n, unsigned k);

// C(n, k) that must fit in int64; placement-sized instances only.
std::int64_t binomial(unsigned n, unsigned k);

// Visits all k-subsets of {0, ..., n-1} in lexicographic order.
void for_each_subset(unsigned n, unsigned k,
                     const std::function<void(const std::vector<int>&)>& fn);

std::uint64_t subset_mask(const std::vector<int>& members);
std::vector<int> mask_members(std::uint64_t mask);

std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace cwdc
