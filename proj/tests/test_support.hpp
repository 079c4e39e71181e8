#pragma once

#include <random>
#include <vector>

#include "tricanon/spatial.hpp"

namespace tricanon::testing {

/// Independent route: b[i'][j'][k'] = sum a[i][j][k] r[i][i'] s[j][j'] t[k][k'].
inline SpatialMatrix direct_triple_sum(const SpatialMatrix& a, const EquivCertificate& c) {
  SpatialMatrix out(a.field(), a.dims());
  for (std::size_t i2 = 0; i2 < a.m(); ++i2)
    for (std::size_t j2 = 0; j2 < a.n(); ++j2)
      for (std::size_t k2 = 0; k2 < a.q(); ++k2) {
        FieldElement acc = a.field().zero();
        for (std::size_t i = 0; i < a.m(); ++i)
          for (std::size_t j = 0; j < a.n(); ++j)
            for (std::size_t k = 0; k < a.q(); ++k)
              acc += a(i, j, k) * c.R(i, i2) * c.S(j, j2) * c.T(k, k2);
        out(i2, j2, k2) = acc;
      }
  return out;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  /// Uniform over GF(p); over Q a fraction with |num|, den <= 10.
  FieldElement element(const Field& f) {
    if (f.is_prime_field()) return f.from_int(integer(0, f.characteristic() - 1));
    return f.from_fraction(integer(-10, 10), integer(1, 10));
  }

  /// Entries zeroed with probability `sparsity` to reach degenerate orbits.
  SpatialMatrix tensor(const Field& f, Dims d, double sparsity = 0.0) {
    SpatialMatrix a(f, d);
    for (std::size_t i = 0; i < d.m; ++i)
      for (std::size_t j = 0; j < d.n; ++j)
        for (std::size_t k = 0; k < d.q; ++k)
          a(i, j, k) = chance(sparsity) ? f.zero() : element(f);
    return a;
  }

  ExactMatrix matrix(const Field& f, std::size_t rows, std::size_t cols) {
    ExactMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = element(f);
    return m;
  }

  ExactMatrix nonsingular(const Field& f, std::size_t n) {
    for (;;) {
      ExactMatrix m = matrix(f, n, n);
      if (is_nonsingular(m)) return m;
    }
  }

  EquivCertificate certificate(const Field& f, Dims d) {
    return {nonsingular(f, d.m), nonsingular(f, d.n), nonsingular(f, d.q)};
  }

  Dims dims(std::size_t max_m, std::size_t max_n, std::size_t max_q) {
    return {static_cast<std::size_t>(integer(0, static_cast<long long>(max_m))),
            static_cast<std::size_t>(integer(0, static_cast<long long>(max_n))),
            static_cast<std::size_t>(integer(0, static_cast<long long>(max_q)))};
  }

 private:
  std::mt19937_64 rng_;
};

/// Number of distinct linear combinations of `family` over GF(p): p^rank.
inline std::size_t brute_force_span_size(const std::vector<ExactMatrix>& family) {
  if (family.empty()) return 1;
  const Field f = family.front().field();
  const auto elems = f.elements();
  std::vector<std::vector<FieldElement>> seen;
  std::vector<std::size_t> coeff(family.size(), 0);
  for (;;) {
    std::vector<FieldElement> combo(family.front().entries().size(), f.zero());
    for (std::size_t l = 0; l < family.size(); ++l)
      for (std::size_t e = 0; e < combo.size(); ++e) combo[e] += elems[coeff[l]] * family[l].entries()[e];
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == combo;
    if (!dup) seen.push_back(std::move(combo));
    std::size_t pos = 0;
    while (pos < coeff.size() && ++coeff[pos] == elems.size()) coeff[pos++] = 0;
    if (pos == coeff.size()) break;
  }
  return seen.size();
}

}  // namespace tricanon::testing
