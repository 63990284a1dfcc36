#include "cwdc/map_phase.hpp"

#include "cwdc/errors.hpp"

namespace cwdc {

void MapOutput::put(int target, std::int64_t file, BitString value) {
  values_[key(target, file)] = std::move(value);
}

const BitString& MapOutput::value(int target, std::int64_t file) const {
  // range check first: the flat key would alias neighbouring targets
  if (target < 0 || target >= users_ || file < 0 || file >= files_)
    throw SimError(ErrorCode::MissingValue,
                   "map value index out of range: target " + std::to_string(target + 1) +
                       ", file " + std::to_string(file + 1));
  auto it = values_.find(key(target, file));
  if (it == values_.end())
    throw SimError(ErrorCode::MissingValue,
                   "no map value for target " + std::to_string(target + 1) + ", file " +
                       std::to_string(file + 1));
  return it->second;
}

const BitString& LocalMapView::value(int target, std::int64_t file) const {
  if (!placement_->stores(user_, file))
    throw SimError(ErrorCode::MissingValue,
                   "user " + std::to_string(user_ + 1) + " does not store file " +
                       std::to_string(file + 1));
  return out_->value(target, file);
}

MapOutput run_map(const Dataset& data, const ComputeFunctions& fns, const Placement& p) {
  MapOutput out(p.users, p.files);
  for (std::int64_t n = 0; n < p.files; ++n) {
    if (p.owner_mask[std::size_t(n)] == 0) continue;
    for (int k = 0; k < p.users; ++k)
      out.put(k, n, fns.map_value(data.inputs[std::size_t(k)], data.files[std::size_t(n)]));
  }
  return out;
}

BitString run_reduce(const LocalMapView& local, const ComputeFunctions& fns,
                     const std::vector<std::int64_t>& available,
                     const std::unordered_map<std::int64_t, BitString>& recovered) {
  std::vector<std::pair<std::int64_t, BitString>> ordered;
  ordered.reserve(available.size());
  for (std::int64_t n : available) {
    if (local.stores(n)) {
      ordered.emplace_back(n, local.value(local.user(), n));
    } else {
      auto it = recovered.find(n);
      if (it == recovered.end())
        throw SimError(ErrorCode::MissingValue,
                       "user " + std::to_string(local.user() + 1) +
                           " has no value for file " + std::to_string(n + 1));
      ordered.emplace_back(n, it->second);
    }
  }
  return fns.reduce_output(ordered);
}

}  // namespace cwdc
