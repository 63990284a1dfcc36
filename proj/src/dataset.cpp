#include "cwdc/dataset.hpp"

#include "cwdc/errors.hpp"
#include "cwdc/hash.hpp"

namespace cwdc {

namespace {
// Fixed domain tags keep map values, reduce outputs, and raw content in
// disjoint keyspaces regardless of the run seed.
constexpr std::uint64_t kFileDomain = 0x66696C6573ull;     // "files"
constexpr std::uint64_t kInputDomain = 0x696E707574ull;    // "input"
constexpr std::uint64_t kMapDomain = 0x6D61702D76ull;      // "map-v"
constexpr std::uint64_t kReduceDomain = 0x7265647563ull;   // "reduc"
}  // namespace

Dataset synthesize_dataset(const SystemConfig& cfg) {
  Dataset d;
  d.files.reserve(std::size_t(cfg.files));
  for (std::int64_t n = 0; n < cfg.files; ++n)
    d.files.push_back(expand_bits(derive_key(cfg.seed, "file", std::uint64_t(n), kFileDomain),
                                  std::size_t(cfg.file_bits)));
  d.inputs.reserve(std::size_t(cfg.users));
  for (int k = 0; k < cfg.users; ++k)
    d.inputs.push_back(expand_bits(derive_key(cfg.seed, "input", std::uint64_t(k), kInputDomain),
                                   std::size_t(cfg.input_bits)));
  return d;
}

BitString ComputeFunctions::map_value(const BitString& input, const BitString& file) const {
  std::uint64_t h = hash_bytes(kMapDomain, input.data(), input.byte_size());
  h = hash_combine(h, input.bit_size());
  h = hash_bytes(h, file.data(), file.byte_size());
  h = hash_combine(h, file.bit_size());
  return expand_bits(h, std::size_t(value_bits_));
}

BitString ComputeFunctions::reduce_output(
    const std::vector<std::pair<std::int64_t, BitString>>& ordered) const {
  std::uint64_t h = kReduceDomain;
  for (const auto& [file, value] : ordered) {
    if (value.bit_size() != std::size_t(value_bits_))
      throw SimError(ErrorCode::InconsistentLengths, "reduce input has wrong value width");
    h = hash_combine(h, std::uint64_t(file));
    h = hash_bytes(h, value.data(), value.byte_size());
  }
  h = hash_combine(h, ordered.size());
  return expand_bits(h, std::size_t(output_bits_));
}

BitString oracle_output(const Dataset& data, const ComputeFunctions& fns, int user,
                        const std::vector<std::int64_t>& files) {
  std::vector<std::pair<std::int64_t, BitString>> vals;
  vals.reserve(files.size());
  for (std::int64_t n : files)
    vals.emplace_back(n, fns.map_value(data.inputs[std::size_t(user)],
                                       data.files[std::size_t(n)]));
  return fns.reduce_output(vals);
}

}  // namespace cwdc
