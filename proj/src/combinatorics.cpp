#include "cwdc/combinatorics.hpp"

#include <bit>

#include "cwdc/errors.hpp"

namespace cwdc {

mpz_class binomial_mpz(unsigned n, unsigned k) {
  mpz_class out;
  if (k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::int64_t binomial(unsigned n, unsigned k) {
  mpz_class v = binomial_mpz(n, k);
  if (!v.fits_slong_p())
    throw SimError(ErrorCode::SimLimitExceeded, "binomial exceeds 64-bit range");
  return v.get_si();
}

void for_each_subset(unsigned n, unsigned k,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n) return;
  std::vector<int> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = int(i);
  for (;;) {
    fn(idx);
    // advance rightmost index that still has room
    int i = int(k) - 1;
    while (i >= 0 && idx[i] == int(n - k + i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t subset_mask(const std::vector<int>& members) {
  std::uint64_t m = 0;
  for (int u : members) m |= std::uint64_t(1) << u;
  return m;
}

std::vector<int> mask_members(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(std::size_t(std::popcount(mask)));
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace cwdc
