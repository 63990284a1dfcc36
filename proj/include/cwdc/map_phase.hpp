#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cwdc/dataset.hpp"
#include "cwdc/placement.hpp"

namespace cwdc {

// Map-phase results. v_{k,n} is a pure function of (input k, file n), so a
// value computed at two users is bit-identical and is stored once here;
// ownership checks are what keep the simulation honest about who may read
// which entry.
class MapOutput {
 public:
  MapOutput(int users, std::int64_t files) : users_(users), files_(files) {}

  void put(int target, std::int64_t file, BitString value);

  // Value for (target, file); file must carry at least one owner.
  const BitString& value(int target, std::int64_t file) const;

  // Values computed at `user`: K per stored file.
  std::int64_t count_at(int user, const Placement& p) const {
    return std::int64_t(users_) * p.stored_count(user);
  }

  int users() const { return users_; }

 private:
  std::uint64_t key(int target, std::int64_t file) const {
    return std::uint64_t(target) * std::uint64_t(files_) + std::uint64_t(file);
  }

  int users_;
  std::int64_t files_;
  std::unordered_map<std::uint64_t, BitString> values_;
};

// Read access restricted to one user's stored files; the shuffle decoder
// and the reduce step see the map phase only through this.
class LocalMapView {
 public:
  LocalMapView(int user, const Placement& placement, const MapOutput& out)
      : user_(user), placement_(&placement), out_(&out) {}

  // Throws MissingValue when `file` is not stored at this user.
  const BitString& value(int target, std::int64_t file) const;
  bool stores(std::int64_t file) const { return placement_->stores(user_, file); }
  int user() const { return user_; }

 private:
  int user_;
  const Placement* placement_;
  const MapOutput* out_;
};

// Evaluates map on every stored (file, target) pair across all users.
MapOutput run_map(const Dataset& data, const ComputeFunctions& fns, const Placement& p);

// Reduce for one user: local values for stored files, recovered values for
// the rest. `available` lists the files to reduce over (sorted); a file
// neither stored nor recovered raises MissingValue.
BitString run_reduce(const LocalMapView& local, const ComputeFunctions& fns,
                     const std::vector<std::int64_t>& available,
                     const std::unordered_map<std::int64_t, BitString>& recovered);

}  // namespace cwdc
