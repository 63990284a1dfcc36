#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cwdc {

// Exact rational arithmetic for loads, theory values, and bounds. Measured
// loads are ratios of bit counters, so everything downstream of the counters
// stays exact until the final double conversion for printing.
using Rat = mpq_class;

Rat make_rat(long num, long den);
Rat rat_pow(const Rat& base, unsigned exp);

long rat_floor(const Rat& q);
long rat_ceil(const Rat& q);
bool rat_is_integer(const Rat& q);

double rat_to_double(const Rat& q);
std::string rat_to_string(const Rat& q);

// Parses "p/q", "p", or a decimal literal. Decimal literals are first read
// exactly (0.25 -> 1/4) and then snapped to the simplest fraction within
// `decimal_tol`, so a CLI value like 0.6667 selects 2/3 and hits the
// integer-replication path it clearly aims at. Fractions are never snapped.
Rat parse_ratio(const std::string& text, double decimal_tol = 5e-5);

// Simplest fraction within +-tol of x (Stern-Brocot walk).
Rat rationalize(double x, double tol);

}  // namespace cwdc
