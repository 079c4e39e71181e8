#include "tricanon/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "tricanon/error.hpp"

namespace tricanon {

namespace {

constexpr std::size_t kMaxVolume = 64;

void require_prime_field(const Field& field) {
  if (!field.is_prime_field()) throw UnsupportedField("orbit enumeration needs a prime field");
}

// p^volume, or 0 when it does not fit in 63 bits.
std::uint64_t space_size_or_zero(std::int64_t p, std::size_t volume) {
  std::uint64_t size = 1;
  const std::uint64_t limit = std::uint64_t{1} << 63;
  for (std::size_t e = 0; e < volume; ++e) {
    if (size > limit / static_cast<std::uint64_t>(p)) return 0;
    size *= static_cast<std::uint64_t>(p);
  }
  return size;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    std::uint32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::uint32_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

std::vector<ExactMatrix> gl_generators(std::size_t size, const Field& field) {
  require_prime_field(field);
  if (size > 4) throw UnsupportedField("gl_generators supports sizes up to 4");
  std::vector<ExactMatrix> out;
  const auto elements = field.elements();
  for (std::size_t u = 0; u < size; ++u)
    for (std::size_t v = 0; v < size; ++v) {
      if (u == v) continue;
      for (std::size_t l = 1; l < elements.size(); ++l) {
        ExactMatrix g = ExactMatrix::identity(field, size);
        g(u, v) = elements[l];
        out.push_back(std::move(g));
      }
    }
  for (std::size_t u = 0; u < size; ++u)
    for (std::size_t l = 2; l < elements.size(); ++l) {
      ExactMatrix g = ExactMatrix::identity(field, size);
      g(u, u) = elements[l];
      out.push_back(std::move(g));
    }
  return out;
}

std::uint64_t encode_tensor(const SpatialMatrix& a) {
  require_prime_field(a.field());
  const auto p = static_cast<std::uint64_t>(a.field().characteristic());
  if (space_size_or_zero(a.field().characteristic(), a.dims().volume()) == 0)
    throw BudgetExceeded("tensor code for " + a.dims().to_string() + " does not fit in 63 bits");
  std::uint64_t code = 0;
  for (const auto& x : a.entries()) code = code * p + static_cast<std::uint64_t>(x.residue());
  return code;
}

SpatialMatrix decode_tensor(const Field& field, Dims dims, std::uint64_t code) {
  require_prime_field(field);
  const auto p = static_cast<std::uint64_t>(field.characteristic());
  SpatialMatrix out(field, dims);
  for (std::size_t e = dims.volume(); e-- > 0;) {
    const std::size_t i = e / (dims.n * dims.q), j = (e / dims.q) % dims.n, k = e % dims.q;
    out(i, j, k) = field.from_int(static_cast<long long>(code % p));
    code /= p;
  }
  return out;
}

GeneratorAction::GeneratorAction(const Field& field, Dims dims)
    : field_(field), dims_(dims), p_(field.characteristic()), space_size_(0) {
  require_prime_field(field);
  if (dims.volume() > kMaxVolume) throw BudgetExceeded("tensor too large for code enumeration");
  space_size_ = space_size_or_zero(p_, dims.volume());
  if (space_size_ == 0) throw BudgetExceeded("tensor space " + dims.to_string() + " too large");
  const std::array<std::size_t, 3> sizes{dims.m, dims.n, dims.q};
  for (int mode = 1; mode <= 3; ++mode)
    for (auto& g : gl_generators(sizes[static_cast<std::size_t>(mode - 1)], field)) {
      std::vector<std::int64_t> ints;
      for (const auto& x : g.entries()) ints.push_back(x.residue());
      generators_.push_back({mode, std::move(ints), std::move(g)});
    }
}

std::uint64_t GeneratorAction::apply(std::size_t g, std::uint64_t code) const {
  const std::size_t m = dims_.m, n = dims_.n, q = dims_.q, vol = dims_.volume();
  std::array<std::int64_t, kMaxVolume> a{}, b{};
  for (std::size_t e = vol; e-- > 0;) {
    a[e] = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(p_));
    code /= static_cast<std::uint64_t>(p_);
  }
  const ModeGenerator& gen = generators_[g];
  const std::vector<std::int64_t>& t = gen.matrix;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < q; ++k) {
        std::int64_t acc = 0;
        if (gen.mode == 1) {
          for (std::size_t x = 0; x < m; ++x) acc += a[(x * n + j) * q + k] * t[x * m + i];
        } else if (gen.mode == 2) {
          for (std::size_t x = 0; x < n; ++x) acc += a[(i * n + x) * q + k] * t[x * n + j];
        } else {
          for (std::size_t x = 0; x < q; ++x) acc += a[(i * n + j) * q + x] * t[x * q + k];
        }
        b[(i * n + j) * q + k] = acc % p_;
      }
  std::uint64_t out = 0;
  for (std::size_t e = 0; e < vol; ++e)
    out = out * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(b[e]);
  return out;
}

EquivCertificate GeneratorAction::certificate(std::size_t g) const {
  EquivCertificate c = EquivCertificate::identity(field_, dims_);
  const ModeGenerator& gen = generators_[g];
  (gen.mode == 1 ? c.R : gen.mode == 2 ? c.S : c.T) = gen.exact;
  return c;
}

std::vector<SpatialMatrix> orbit(const SpatialMatrix& a) {
  const GeneratorAction action(a.field(), a.dims());
  const std::uint64_t start = encode_tensor(a);
  std::unordered_set<std::uint64_t> seen{start};
  std::deque<std::uint64_t> queue{start};
  while (!queue.empty()) {
    const std::uint64_t x = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < action.generator_count(); ++g) {
      const std::uint64_t y = action.apply(g, x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  std::vector<std::uint64_t> codes(seen.begin(), seen.end());
  std::sort(codes.begin(), codes.end());
  std::vector<SpatialMatrix> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(decode_tensor(a.field(), a.dims(), c));
  return out;
}

Classification classify_all(const Field& field, Dims dims, std::uint64_t budget, unsigned threads) {
  require_prime_field(field);
  const std::uint64_t total = space_size_or_zero(field.characteristic(), dims.volume());
  if (total == 0 || total > budget || total > std::numeric_limits<std::uint32_t>::max())
    throw BudgetExceeded("GF(" + std::to_string(field.characteristic()) + ") tensor space " +
                         dims.to_string() + " exceeds the enumeration budget of " +
                         std::to_string(budget));
  const GeneratorAction action(field, dims);
  UnionFind uf(static_cast<std::size_t>(total));
  std::mutex uf_mutex;

  threads = std::max(1u, threads);
  const std::uint64_t chunk = (total + threads - 1) / threads;
  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    constexpr std::uint64_t kBatch = 4096;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint64_t lo = begin; lo < end; lo += kBatch) {
      edges.clear();
      for (std::uint64_t x = lo; x < std::min(end, lo + kBatch); ++x)
        for (std::size_t g = 0; g < action.generator_count(); ++g) {
          const std::uint64_t y = action.apply(g, x);
          if (y != x) edges.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
        }
      std::lock_guard lock(uf_mutex);
      for (const auto& [x, y] : edges) uf.unite(x, y);
    }
  };
  if (threads == 1) {
    worker(0, total);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(total, t * chunk), end = std::min(total, begin + chunk);
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  Classification out{field, dims, {}, std::vector<std::uint32_t>(total), total};
  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> class_of_root(total, kUnassigned);
  for (std::uint64_t x = 0; x < total; ++x) {
    const std::uint32_t root = uf.find(static_cast<std::uint32_t>(x));
    if (class_of_root[root] == kUnassigned) {
      class_of_root[root] = static_cast<std::uint32_t>(out.classes.size());
      out.classes.push_back({x, decode_tensor(field, dims, x), 0});
    }
    const std::uint32_t cls = class_of_root[root];
    out.class_of_code[x] = cls;
    ++out.classes[cls].size;
  }
  return out;
}

}  // namespace tricanon
