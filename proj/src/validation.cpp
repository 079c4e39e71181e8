#include "tricanon/validation.hpp"

#include <limits>
#include <unordered_map>

#include "tricanon/error.hpp"

namespace tricanon {

namespace {

constexpr std::size_t kMaxFailures = 10;

void record(CrossCheck& out, std::string message) {
  if (out.failures.size() < kMaxFailures) out.failures.push_back(std::move(message));
}

}  // namespace

CrossCheck cross_check_canonical_map(const Classification& cls) {
  CrossCheck out;
  out.class_labels.assign(cls.classes.size(), std::nullopt);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> canonical_code(cls.classes.size(), kNone);
  std::vector<bool> unsupported(cls.classes.size(), false);

  for (std::uint64_t x = 0; x < cls.total; ++x) {
    const std::uint32_t c = cls.class_of_code[x];
    const SpatialMatrix a = decode_tensor(cls.field, cls.dims, x);
    std::optional<CanonResult> result;
    try {
      result = canonicalize(a);
    } catch (const UnsupportedRanks&) {
      unsupported[c] = true;
    }
    ++out.tensors_checked;
    if (!result) continue;
    const CanonResult& r = *result;
    if (!verify_certificate(a, r.cert, r.canonical)) {
      out.certificates_sound = false;
      record(out, "certificate fails for " + a.to_string());
    }
    const std::uint64_t code = encode_tensor(r.canonical);
    if (canonical_code[c] == kNone) {
      canonical_code[c] = code;
      out.class_labels[c] = r.label;
    } else if (canonical_code[c] != code || !(*out.class_labels[c] == r.label)) {
      out.constant_on_orbits = false;
      record(out, "orbit of " + cls.classes[c].representative.to_string() + " maps to both " +
                      out.class_labels[c]->to_string() + " and " + r.label.to_string());
    }
  }

  std::unordered_map<std::uint64_t, std::uint32_t> owner;
  for (std::uint32_t c = 0; c < cls.classes.size(); ++c) {
    if (unsupported[c]) {
      ++out.unsupported_classes;
      out.class_labels[c].reset();
      continue;
    }
    auto [it, fresh] = owner.emplace(canonical_code[c], c);
    if (!fresh) {
      out.distinct_across_orbits = false;
      record(out, "orbits of " + cls.classes[it->second].representative.to_string() + " and " +
                      cls.classes[c].representative.to_string() + " share canonical form " +
                      out.class_labels[c]->to_string());
    }
  }
  return out;
}

}  // namespace tricanon
