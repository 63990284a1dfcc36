#include "cwdc/placement.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "cwdc/combinatorics.hpp"
#include "cwdc/errors.hpp"
#include "cwdc/hash.hpp"

namespace cwdc {

std::vector<int> component_batch_subset(int users, const PlacementComponent& c,
                                        std::int64_t batch) {
  // unrank `batch` in the lexicographic order of replication-sized subsets
  std::vector<int> subset;
  subset.reserve(std::size_t(c.replication));
  std::int64_t r = batch;
  int next = 0;
  for (int picked = 0; picked < c.replication; ++picked) {
    for (int u = next;; ++u) {
      std::int64_t below = binomial(unsigned(users - u - 1),
                                    unsigned(c.replication - picked - 1));
      if (r < below) {
        subset.push_back(u);
        next = u + 1;
        break;
      }
      r -= below;
    }
  }
  return subset;
}

namespace {

void fill_component(Placement& p, const PlacementComponent& c) {
  std::int64_t file = c.file_begin;
  for_each_subset(unsigned(p.users), unsigned(c.replication),
                  [&](const std::vector<int>& subset) {
                    std::uint64_t mask = subset_mask(subset);
                    for (std::int64_t i = 0; i < c.eta; ++i, ++file) {
                      p.owner_mask[std::size_t(file)] = mask;
                      for (int u : subset) p.user_files[std::size_t(u)].push_back(file);
                    }
                  });
  if (file != c.file_end)
    throw SimError(ErrorCode::DivisibilityViolation, "component does not tile its file range");
}

}  // namespace

Placement centralized_placement(const ValidatedConfig& v) {
  if (v.cfg.placement != PlacementMode::centralized)
    throw SimError(ErrorCode::BadInput, "config is not centralized");
  Placement p;
  p.mode = PlacementMode::centralized;
  p.users = v.cfg.users;
  p.files = v.cfg.files;
  p.user_files.resize(std::size_t(p.users));
  p.owner_mask.assign(std::size_t(p.files), 0);
  p.storage_budget = v.storage_files;

  if (v.integer_mu_k) {
    PlacementComponent c;
    c.replication = int(v.mu_k.get_num().get_si());
    c.file_begin = 0;
    c.file_end = p.files;
    c.eta = v.eta;
    c.batch_count = v.batch_count;
    p.components.push_back(c);
  } else {
    PlacementComponent lo;
    lo.replication = v.share.rep_low;
    lo.file_begin = 0;
    lo.file_end = v.share.files_low;
    lo.eta = v.share.eta_low;
    lo.batch_count = v.share.files_low / v.share.eta_low;
    PlacementComponent hi;
    hi.replication = v.share.rep_high;
    hi.file_begin = v.share.files_low;
    hi.file_end = p.files;
    hi.eta = v.share.eta_high;
    hi.batch_count = v.share.files_high / v.share.eta_high;
    p.components.push_back(lo);
    p.components.push_back(hi);
  }
  for (const auto& c : p.components) fill_component(p, c);
  // each user ends up with exactly mu*N files
  for (int u = 0; u < p.users; ++u)
    if (p.stored_count(u) != v.storage_files)
      throw SimError(ErrorCode::DivisibilityViolation, "per-user storage mismatch");
  return p;
}

Placement decentralized_placement(const ValidatedConfig& v) {
  if (v.cfg.placement != PlacementMode::decentralized)
    throw SimError(ErrorCode::BadInput, "config is not decentralized");
  Placement p;
  p.mode = PlacementMode::decentralized;
  p.users = v.cfg.users;
  p.files = v.cfg.files;
  p.user_files.resize(std::size_t(p.users));
  p.owner_mask.assign(std::size_t(p.files), 0);
  p.storage_budget = v.storage_files;

  // Each user independently samples floor(mu*N) distinct files uniformly:
  // partial Fisher-Yates over the file ids, seeded per user.
  for (int u = 0; u < p.users; ++u) {
    std::mt19937_64 rng(derive_key(v.cfg.seed, "placement", std::uint64_t(u)));
    std::vector<std::int64_t> pool(std::size_t(p.files));
    for (std::int64_t n = 0; n < p.files; ++n) pool[std::size_t(n)] = n;
    auto& mine = p.user_files[std::size_t(u)];
    mine.reserve(std::size_t(v.storage_files));
    for (std::int64_t i = 0; i < v.storage_files; ++i) {
      std::uint64_t j = i + uniform_below(rng, std::uint64_t(p.files - i));
      std::swap(pool[std::size_t(i)], pool[std::size_t(j)]);
      mine.push_back(pool[std::size_t(i)]);
    }
    std::sort(mine.begin(), mine.end());
    for (std::int64_t n : mine) p.owner_mask[std::size_t(n)] |= std::uint64_t(1) << u;
  }
  return p;
}

Placement make_placement(const ValidatedConfig& v) {
  return v.cfg.placement == PlacementMode::centralized ? centralized_placement(v)
                                                       : decentralized_placement(v);
}

ReplicationHistogram replication_histogram(const Placement& p) {
  std::vector<int> everyone(std::size_t(p.users));
  for (int u = 0; u < p.users; ++u) everyone[std::size_t(u)] = u;
  return replication_histogram(p, everyone);
}

ReplicationHistogram replication_histogram(const Placement& p,
                                           const std::vector<int>& participants) {
  ReplicationHistogram h;
  h.users = int(participants.size());
  h.files = p.files;
  h.count.assign(std::size_t(h.users) + 1, 0);
  std::uint64_t pmask = subset_mask(participants);
  for (std::int64_t n = 0; n < p.files; ++n)
    ++h.count[std::size_t(std::popcount(p.owner_mask[std::size_t(n)] & pmask))];
  return h;
}

ReplicationHistogram sample_replication_histogram(int users, std::int64_t files,
                                                  std::int64_t storage, std::uint64_t seed) {
  if (users < 1 || files < 1 || storage < 0 || storage > files)
    throw SimError(ErrorCode::BadInput, "bad sampling parameters");
  std::vector<int> owners(std::size_t(files), 0);
  std::vector<std::int64_t> pool(static_cast<std::size_t>(files));
  for (int u = 0; u < users; ++u) {
    std::mt19937_64 rng(derive_key(seed, "placement", std::uint64_t(u)));
    for (std::int64_t n = 0; n < files; ++n) pool[std::size_t(n)] = n;
    for (std::int64_t i = 0; i < storage; ++i) {
      std::uint64_t j = i + uniform_below(rng, std::uint64_t(files - i));
      std::swap(pool[std::size_t(i)], pool[std::size_t(j)]);
      ++owners[std::size_t(pool[std::size_t(i)])];
    }
  }
  ReplicationHistogram h;
  h.users = users;
  h.files = files;
  h.count.assign(std::size_t(users) + 1, 0);
  for (std::int64_t n = 0; n < files; ++n) ++h.count[std::size_t(owners[std::size_t(n)])];
  return h;
}

Rat information_loss(const ReplicationHistogram& h) {
  return make_rat(h.count[0], h.files);
}

void dump_placement(std::ostream& out, const Placement& p) {
  for (int u = 0; u < p.users; ++u) {
    const auto& mine = p.user_files[std::size_t(u)];
    for (std::size_t i = 0; i < mine.size(); ++i) {
      if (i) out << ' ';
      out << mine[i] + 1;
    }
    out << '\n';
  }
}

Placement load_placement(std::istream& in, PlacementMode mode, std::int64_t files) {
  Placement p;
  p.mode = mode;
  std::string line;
  std::int64_t max_file = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::int64_t> mine;
    std::int64_t id;
    while (ls >> id) {
      if (id < 1) throw SimError(ErrorCode::BadInput, "placement file ids are 1-based");
      mine.push_back(id - 1);
      max_file = std::max(max_file, id - 1);
    }
    std::sort(mine.begin(), mine.end());
    if (std::adjacent_find(mine.begin(), mine.end()) != mine.end())
      throw SimError(ErrorCode::BadInput, "duplicate file in placement row");
    p.user_files.push_back(std::move(mine));
  }
  p.users = int(p.user_files.size());
  if (p.users == 0) throw SimError(ErrorCode::BadInput, "empty placement");
  if (p.users > 64) throw SimError(ErrorCode::SimLimitExceeded, "placement has over 64 users");
  if (files > 0 && files <= max_file)
    throw SimError(ErrorCode::BadInput, "placement references files past the stated count");
  p.files = files > 0 ? files : max_file + 1;
  p.owner_mask.assign(std::size_t(p.files), 0);
  for (int u = 0; u < p.users; ++u)
    for (std::int64_t n : p.user_files[std::size_t(u)])
      p.owner_mask[std::size_t(n)] |= std::uint64_t(1) << u;
  p.storage_budget = p.users ? std::int64_t(p.user_files[0].size()) : 0;
  return p;
}

}  // namespace cwdc
