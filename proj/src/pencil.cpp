#include <algorithm>
#include <vector>

#include "tricanon/canonicalizer.hpp"
#include "tricanon/error.hpp"

namespace tricanon {

namespace {

// Polynomial in t with rational coefficients, lowest degree first.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

void poly_add(Poly& acc, const Poly& b, bool negate) {
  if (acc.size() < b.size()) acc.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) acc[i] += negate ? mpq_class(-b[i]) : b[i];
  trim(acc);
}

mpq_class poly_eval(const Poly& p, const mpq_class& t) {
  mpq_class acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Laplace expansion along the first row.
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {mpq_class(1)};
  if (n == 1) return m[0][0];
  Poly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].empty()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    poly_add(det, poly_mul(m[0][c], poly_det(minor)), c % 2 == 1);
  }
  return det;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  mpz_class v = abs(n);
  // divisors are enumerated up to sqrt(v)
  const mpz_class bound = mpz_class(1) << 40;
  if (v > bound)
    throw FactorizationOverflow("coefficient " + v.get_str() + " exceeds the divisor bound");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Rational roots of a nonzero polynomial, by the rational root theorem.
std::vector<mpq_class> rational_roots(Poly p) {
  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  if (p.size() <= 1) return roots;

  mpz_class common(1);
  for (const auto& c : p) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(mpz_class(c * common));

  for (const auto& u : positive_divisors(ints.front()))
    for (const auto& w : positive_divisors(ints.back()))
      for (int sign : {1, -1}) {
        mpq_class cand(sign * u, w);
        cand.canonicalize();
        if (poly_eval(p, cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  return roots;
}

ExactMatrix combine(const FieldElement& alpha, const ExactMatrix& a, const FieldElement& beta,
                    const ExactMatrix& b) {
  return alpha * a + beta * b;
}

std::size_t rational_pencil_min_rank(const ExactMatrix& a, const ExactMatrix& b) {
  const Field& f = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  // Points (1 : 0) and (t : 1). The generic rank g of tA + B is attained at
  // one of t = 0..min(rows, cols), since a nonzero g x g minor has degree <= g.
  std::size_t best = rank(a);
  std::size_t generic = 0;
  for (std::size_t t = 0; t <= std::min(rows, cols); ++t)
    generic = std::max(generic, rank(combine(f.from_int(static_cast<long long>(t)), a, f.one(), b)));
  best = std::min(best, generic);
  if (generic == 0) return best;

  // rank(tA + B) < g exactly at the common roots of all g x g minors, so
  // the roots of one nonzero minor are the only candidates.
  Poly witness;
  std::vector<bool> rmask(rows, false), cmask(cols, false);
  std::fill(rmask.begin(), rmask.begin() + static_cast<std::ptrdiff_t>(generic), true);
  do {
    std::fill(cmask.begin(), cmask.end(), false);
    std::fill(cmask.begin(), cmask.begin() + static_cast<std::ptrdiff_t>(generic), true);
    do {
      std::vector<std::vector<Poly>> m;
      for (std::size_t i = 0; i < rows; ++i) {
        if (!rmask[i]) continue;
        std::vector<Poly> row;
        for (std::size_t j = 0; j < cols; ++j) {
          if (!cmask[j]) continue;
          Poly entry{b(i, j).rational(), a(i, j).rational()};
          trim(entry);
          row.push_back(std::move(entry));
        }
        m.push_back(std::move(row));
      }
      witness = poly_det(m);
      if (!witness.empty()) break;
    } while (std::prev_permutation(cmask.begin(), cmask.end()));
    if (!witness.empty()) break;
  } while (std::prev_permutation(rmask.begin(), rmask.end()));
  if (witness.empty()) throw InternalInvariantViolation("no nonzero minor of the generic rank");

  for (const auto& root : rational_roots(witness))
    best = std::min(best, rank(combine(f.from_fraction(root.get_num(), root.get_den()), a, f.one(), b)));
  return best;
}

}  // namespace

std::size_t pencil_min_rank(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("pencil slices of different shapes");
  if (!(a.field() == b.field())) throw FieldMismatch("pencil slices over different fields");
  const Field& f = a.field();
  if (f.is_rational()) return rational_pencil_min_rank(a, b);

  std::size_t best = rank(a);
  for (const auto& alpha : f.elements()) best = std::min(best, rank(combine(alpha, a, f.one(), b)));
  return best;
}

}  // namespace tricanon
