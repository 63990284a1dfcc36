#include "cwdc/analysis.hpp"

#include <cmath>

#include "cwdc/combinatorics.hpp"
#include "cwdc/errors.hpp"

namespace cwdc {

namespace {

void require_mu_range(int users, const Rat& mu) {
  if (mu * users < 1 || mu > 1)
    throw SimError(ErrorCode::MuOutOfRange, "need 1/K <= mu <= 1, got " + rat_to_string(mu));
}

TheoryLoads integer_point_loads(int users, int t) {
  // replication t = muK: up = (K-t)/t, down = t/(t+1) of that
  TheoryLoads out;
  out.up = make_rat(users - t, t);
  out.down = out.up * make_rat(t, t + 1);
  return out;
}

}  // namespace

TheoryLoads theory_centralized(int users, const Rat& mu) {
  require_mu_range(users, mu);
  Rat mu_k = mu * users;
  if (rat_is_integer(mu_k)) return integer_point_loads(users, int(mu_k.get_num().get_si()));
  int lo = int(rat_floor(mu_k));
  TheoryLoads a = integer_point_loads(users, lo);
  TheoryLoads b = integer_point_loads(users, lo + 1);
  // memory-sharing weight: fraction of files at the lower replication
  Rat mu1 = make_rat(lo, users), mu2 = make_rat(lo + 1, users);
  Rat alpha = (mu2 - mu) / (mu2 - mu1);
  TheoryLoads out;
  out.up = alpha * a.up + (1 - alpha) * b.up;
  out.down = alpha * a.down + (1 - alpha) * b.down;
  return out;
}

DecentralizedTheory theory_decentralized(int users, const Rat& mu) {
  if (mu <= 0 || mu > 1)
    throw SimError(ErrorCode::MuOutOfRange, "need 0 < mu <= 1, got " + rat_to_string(mu));
  DecentralizedTheory out;
  out.up = Rat(0);
  out.down = Rat(0);
  out.delta = rat_pow(1 - mu, unsigned(users));
  for (int j = 1; j < users; ++j) {
    Rat mass = Rat(binomial_mpz(unsigned(users), unsigned(j))) * rat_pow(mu, unsigned(j)) *
               rat_pow(1 - mu, unsigned(users - j));
    out.up += mass * make_rat(users - j, j);
    out.down += mass * make_rat(users - j, j + 1);
  }
  return out;
}

Rat uncoded_load_centralized(int users, const Rat& mu) {
  require_mu_range(users, mu);
  return Rat(users) * (1 - mu);
}

Rat uncoded_load_decentralized(int users, const Rat& mu) {
  if (mu <= 0 || mu > 1)
    throw SimError(ErrorCode::MuOutOfRange, "need 0 < mu <= 1, got " + rat_to_string(mu));
  // per needed value the file must be stored somewhere else:
  // K * (1-mu) * (1 - (1-mu)^(K-1)) in expectation
  return Rat(users) * (1 - mu) * (1 - rat_pow(1 - mu, unsigned(users - 1)));
}

Rat lower_bound_uplink(const ReplicationHistogram& h) {
  if (h.count[0] > 0)
    throw SimError(ErrorCode::LostFilesPresent,
                   std::to_string(h.count[0]) + " files are stored nowhere");
  Rat sum(0);
  for (int j = 1; j <= h.users; ++j)
    sum += make_rat(h.count[std::size_t(j)], h.files) * make_rat(h.users - j, j);
  return sum;
}

Rat lower_bound_downlink(const ReplicationHistogram& h) {
  if (h.count[0] > 0)
    throw SimError(ErrorCode::LostFilesPresent,
                   std::to_string(h.count[0]) + " files are stored nowhere");
  Rat sum(0);
  for (int j = 1; j <= h.users; ++j)
    sum += make_rat(h.count[std::size_t(j)], h.files) * make_rat(h.users - j, j + 1);
  return sum;
}

TheoryLoads lower_bound_envelope(int users, const Rat& mu) {
  require_mu_range(users, mu);
  Rat mu_k = mu * users;
  int lo = int(rat_floor(mu_k));
  if (Rat(lo) == mu_k) return integer_point_loads(users, lo);
  // chord between the adjacent integer points; both curves are convex in
  // mu, so the chord is their lower convex envelope on this interval
  TheoryLoads a = integer_point_loads(users, lo);
  TheoryLoads b = integer_point_loads(users, lo + 1);
  Rat x0 = make_rat(lo, users), x1 = make_rat(lo + 1, users);
  Rat w = (mu - x0) / (x1 - x0);
  TheoryLoads out;
  out.up = a.up + w * (b.up - a.up);
  out.down = a.down + w * (b.down - a.down);
  return out;
}

TheoryLoads decentralized_bound(int users, const Rat& mu, const Rat& delta) {
  if (delta < 0 || delta > 1)
    throw SimError(ErrorCode::BadInput, "delta outside [0, 1]");
  if (mu <= 0 || mu > 1)
    throw SimError(ErrorCode::MuOutOfRange, "need 0 < mu <= 1, got " + rat_to_string(mu));
  TheoryLoads out;
  Rat avail = 1 - delta;
  out.up = (avail / mu - 1) * avail;
  Rat mu_k = mu * users;
  out.down = (mu_k / (mu_k + avail)) * out.up;
  return out;
}

Concentration concentration_density(const std::vector<ReplicationHistogram>& samples,
                                    const Rat& mu) {
  if (samples.empty()) throw SimError(ErrorCode::BadInput, "no histogram samples");
  int users = samples[0].users;
  Concentration c;
  c.empirical.assign(std::size_t(users) + 1, 0.0);
  c.binomial.assign(std::size_t(users) + 1, 0.0);
  double total = 0;
  for (const auto& h : samples) {
    if (h.users != users) throw SimError(ErrorCode::BadInput, "mixed user counts");
    total += double(h.files);
    for (int j = 0; j <= users; ++j) c.empirical[std::size_t(j)] += double(h.count[std::size_t(j)]);
  }
  for (int j = 0; j <= users; ++j) {
    c.empirical[std::size_t(j)] /= total;
    Rat mass = Rat(binomial_mpz(unsigned(users), unsigned(j))) * rat_pow(mu, unsigned(j)) *
               rat_pow(1 - mu, unsigned(users - j));
    c.binomial[std::size_t(j)] = rat_to_double(mass);
    c.tv += std::abs(c.empirical[std::size_t(j)] - c.binomial[std::size_t(j)]);
  }
  c.tv /= 2;
  return c;
}

LoadReport measure_loads(const ValidatedConfig& v, const ShuffleCounters& counters,
                         const ReplicationHistogram& hist) {
  LoadReport r;
  r.counters = counters;
  Rat norm = Rat(v.cfg.files) * v.cfg.value_bits;
  r.load_up = Rat(counters.up_bits) / norm;
  r.load_down = Rat(counters.down_bits) / norm;
  r.load_up_net = Rat(counters.up_content_bits) / norm;
  r.load_down_net = Rat(counters.down_content_bits) / norm;
  r.padding_up_bits = counters.up_bits - counters.up_content_bits;
  r.padding_down_bits = counters.down_bits - counters.down_content_bits;
  r.delta_measured = information_loss(hist);

  if (v.cfg.placement == PlacementMode::centralized) {
    r.delta_theory = Rat(0);
    if (v.cfg.baseline == Baseline::uncoded) {
      r.theory_up = uncoded_load_centralized(v.cfg.users, v.cfg.mu);
      r.theory_down = r.theory_up;
    } else {
      TheoryLoads t = theory_centralized(v.cfg.users, v.cfg.mu);
      r.theory_up = t.up;
      r.theory_down = t.down;
    }
    TheoryLoads b = lower_bound_envelope(v.cfg.users, v.cfg.mu);
    r.bound_up = b.up;
    r.bound_down = b.down;
  } else {
    DecentralizedTheory t = theory_decentralized(v.cfg.users, v.cfg.mu);
    r.delta_theory = t.delta;
    if (v.cfg.baseline == Baseline::uncoded) {
      r.theory_up = uncoded_load_decentralized(v.cfg.users, v.cfg.mu);
      r.theory_down = r.theory_up;
    } else {
      r.theory_up = t.up;
      r.theory_down = t.down;
    }
    TheoryLoads b = decentralized_bound(v.cfg.users, v.cfg.mu, t.delta);
    r.bound_up = b.up;
    r.bound_down = b.down;
  }

  if (hist.count[0] == 0) {
    r.has_histogram_bounds = true;
    r.hist_bound_up = lower_bound_uplink(hist);
    r.hist_bound_down = lower_bound_downlink(hist);
  }
  return r;
}

}  // namespace cwdc
