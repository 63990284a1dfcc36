#include "cwdc/rational.hpp"

#include <stdexcept>

#include "cwdc/errors.hpp"

namespace cwdc {

Rat make_rat(long num, long den) {
  if (den == 0) throw SimError(ErrorCode::DivideByZero, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_pow(const Rat& base, unsigned exp) {
  Rat out(1);
  Rat b = base;
  while (exp) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

long rat_floor(const Rat& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z.get_si();
}

long rat_ceil(const Rat& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z.get_si();
}

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

double rat_to_double(const Rat& q) { return q.get_d(); }

std::string rat_to_string(const Rat& q) { return q.get_str(); }

namespace {

// Largest integer strictly below t, never less than 1.
long steps_below(const Rat& t) {
  long k = rat_floor(t);
  if (Rat(k) == t) --k;
  return k < 1 ? 1 : k;
}

}  // namespace

Rat rationalize(double x, double tol) {
  if (!(tol > 0)) throw SimError(ErrorCode::BadInput, "rationalize needs tol > 0");
  if (x < 0) return -rationalize(-x, tol);
  // mpq from double is exact, so the interval walk below has no rounding.
  Rat lo = Rat(x) - Rat(tol);
  Rat hi = Rat(x) + Rat(tol);
  if (lo <= 0) return Rat(0);
  // Stern-Brocot walk; each batched step consumes one continued-fraction
  // term, so the loop is logarithmic in the result denominator.
  mpz_class a = 0, b = 1, c = 1, d = 0;
  for (int it = 0; it < 256; ++it) {
    Rat m(a + c, b + d);
    m.canonicalize();
    if (m < lo) {
      long k = steps_below((lo * Rat(b) - Rat(a)) / (Rat(c) - lo * Rat(d)));
      a += k * c;
      b += k * d;
    } else if (m > hi) {
      long k = steps_below((Rat(c) - hi * Rat(d)) / (hi * Rat(b) - Rat(a)));
      c += k * a;
      d += k * b;
    } else {
      return m;
    }
  }
  throw SimError(ErrorCode::BadInput, "rationalize did not converge");
}

Rat parse_ratio(const std::string& text, double decimal_tol) {
  if (text.empty()) throw SimError(ErrorCode::BadInput, "empty ratio");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      long num = std::stol(text.substr(0, slash));
      long den = std::stol(text.substr(slash + 1));
      return make_rat(num, den);
    }
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
      return Rat(std::stol(text));
    }
    // Decimal input: snap to the simplest fraction within tolerance so a
    // truncated value like 0.6667 selects 2/3 exactly. Short decimals such
    // as 0.5 or 0.4 already are the simplest fraction in range.
    return rationalize(std::stod(text), decimal_tol);
  } catch (const std::invalid_argument&) {
    throw SimError(ErrorCode::BadInput, "cannot parse ratio: " + text);
  } catch (const std::out_of_range&) {
    throw SimError(ErrorCode::BadInput, "ratio out of range: " + text);
  }
}

}  // namespace cwdc
