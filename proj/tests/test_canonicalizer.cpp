#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "tricanon/canonicalizer.hpp"
#include "tricanon/error.hpp"
#include "tricanon/oracle.hpp"

using namespace tricanon;

namespace {

SpatialMatrix a12a(const Field& f) {
  return SpatialMatrix::from_slices({ExactMatrix(f, {{1, 0}, {0, 1}, {0, 0}}),
                                     ExactMatrix(f, {{0, 0}, {1, 0}, {0, 1}})});
}

CanonicalLabel plain(FormTag t) { return {t, std::nullopt}; }

void check_result(const SpatialMatrix& input, const CanonResult& r) {
  REQUIRE(verify_certificate(input, r.cert, r.canonical));
  REQUIRE(r.canonical == embed_regular(canonical_tensor(input.field(), r.label), input.dims()));
}

}  // namespace

TEST_CASE("canonicalize_regular examples") {
  const Field q = Field::rationals();
  const SpatialMatrix b2 = identity_b_pair(q.from_int(2));
  CanonResult r = canonicalize_regular(b2);
  CHECK(r.label == CanonicalLabel{FormTag::A11, q.from_int(2)});
  CHECK(r.canonical == b2);
  CHECK(r.cert.is_identity());

  r = canonicalize_regular(identity_b_pair(q.from_int(8)));
  CHECK(r.label == CanonicalLabel{FormTag::A11, q.from_int(2)});
  check_result(identity_b_pair(q.from_int(8)), r);

  r = canonicalize_regular(a12a(q));
  CHECK(r.label == plain(FormTag::A12a));
  CHECK(r.canonical == a12a(q));

  const Field gf5 = Field::prime(5);
  const SpatialMatrix a14z = canonical_tensor(gf5, plain(FormTag::A14z));
  testing::Random rnd(31);
  for (int t = 0; t < 20; ++t) {
    const SpatialMatrix moved = apply_equivalence(a14z, rnd.certificate(gf5, a14z.dims()));
    r = canonicalize_regular(moved);
    CHECK(r.label == plain(FormTag::A14z));
    check_result(moved, r);
  }

  const Field gf7 = Field::prime(7);
  r = canonicalize_regular(identity_b_pair(gf7.from_int(5)));
  CHECK(r.label == CanonicalLabel{FormTag::A11, gf7.from_int(3)});
}

TEST_CASE("canonical forms are fixed points with identity certificates") {
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(7)}) {
    for (FormTag t : {FormTag::Zero, FormTag::A9, FormTag::A10, FormTag::A10a, FormTag::A10b,
                      FormTag::A12, FormTag::A12a, FormTag::A14z}) {
      const SpatialMatrix c = canonical_tensor(f, plain(t));
      const CanonResult r = canonicalize_regular(c);
      CHECK(r.label == plain(t));
      CHECK(r.canonical == c);
      CHECK(r.cert.is_identity());
    }
    const FieldElement rep = f.is_rational() ? f.from_int(-6) : f.smallest_nonresidue();
    const CanonResult r = canonicalize(identity_b_pair(rep));
    CHECK(r.cert.is_identity());
  }
}

TEST_CASE("canonicalize examples") {
  const Field q = Field::rationals();
  CanonResult r = canonicalize(SpatialMatrix(q, 4, 2, 2));
  CHECK(r.label == plain(FormTag::Zero));
  CHECK(r.canonical == SpatialMatrix(q, 4, 2, 2));

  const SpatialMatrix equal =
      SpatialMatrix::from_slices({ExactMatrix::identity(q, 2), ExactMatrix::identity(q, 2)});
  r = canonicalize(equal);
  CHECK(r.label == plain(FormTag::A10));
  CHECK(r.canonical == embed_regular(canonical_tensor(q, plain(FormTag::A10)), {2, 2, 2}));
  check_result(equal, r);

  SpatialMatrix spike(q, 2, 5, 7);
  spike(0, 0, 0) = q.one();
  r = canonicalize(spike);
  CHECK(r.label == plain(FormTag::A9));
  CHECK(r.canonical == spike);
  CHECK(r.ranks == ModeRanks{1, 1, 1});
}

TEST_CASE("errors") {
  const Field q = Field::rationals();
  CHECK_THROWS_AS(canonicalize_regular(SpatialMatrix(q, 1, 1, 1)), NotRegular);
  SpatialMatrix wild(q, 3, 3, 3);
  for (std::size_t k = 0; k < 3; ++k) wild(k, k, k) = q.one();
  CHECK_THROWS_AS(canonicalize(wild), UnsupportedRanks);
  CHECK_THROWS_AS(canonicalize_regular(wild), UnsupportedRanks);
  CHECK_THROWS_AS(are_equivalent(wild, wild), UnsupportedRanks);
  CHECK_THROWS_AS(are_equivalent(SpatialMatrix(q, 1, 1, 1), SpatialMatrix(Field::prime(3), 1, 1, 1)),
                  FieldMismatch);
}

TEST_CASE("are_equivalent examples") {
  const Field q = Field::rationals();
  CHECK(are_equivalent(identity_b_pair(q.one()), identity_b_pair(q.from_int(4))));
  CHECK_FALSE(are_equivalent(identity_b_pair(q.one()), identity_b_pair(q.from_int(2))));
  const SpatialMatrix a12 = canonical_tensor(q, plain(FormTag::A12));
  CHECK_FALSE(are_equivalent(a12, a12a(q)));
  const Field gf7 = Field::prime(7);
  CHECK(are_equivalent(identity_b_pair(gf7.from_int(5)), identity_b_pair(gf7.from_int(3))));
  CHECK_FALSE(are_equivalent(SpatialMatrix(q, 2, 2, 2), SpatialMatrix(q, 2, 2, 1)));
}

TEST_CASE("verify_certificate") {
  const Field q = Field::rationals();
  const SpatialMatrix a = identity_b_pair(q.from_int(3));
  const EquivCertificate id = EquivCertificate::identity(q, a.dims());
  CHECK(verify_certificate(a, id, a));
  SpatialMatrix changed = a;
  changed(1, 1, 1) = q.one();
  CHECK_FALSE(verify_certificate(a, id, changed));
  CHECK_THROWS_AS(verify_certificate(a, id, SpatialMatrix(q, 2, 2, 1)), ShapeMismatch);
}

TEST_CASE("orbit invariance and certificate soundness, random") {
  testing::Random rnd(37);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(5), Field::prime(11)})
    for (int t = 0; t < 300; ++t) {
      const Dims d = rnd.dims(5, 3, 3);
      SpatialMatrix a = rnd.tensor(f, d, rnd.chance(0.5) ? 0.7 : 0.0);
      if (d.q == 3)
        for (std::size_t i = 0; i < d.m; ++i)
          for (std::size_t j = 0; j < d.n; ++j) a(i, j, 2) = a(i, j, 0) + a(i, j, 1);
      if (d.n == 3)
        for (std::size_t i = 0; i < d.m; ++i)
          for (std::size_t k = 0; k < d.q; ++k) a(i, 2, k) = a(i, 0, k);
      const SpatialMatrix b = apply_equivalence(a, rnd.certificate(f, d));
      const CanonResult ra = canonicalize(a), rb = canonicalize(b);
      REQUIRE(ra.label == rb.label);
      REQUIRE(ra.canonical == rb.canonical);
      check_result(a, ra);
      check_result(b, rb);
      const CanonResult again = canonicalize(ra.canonical);
      REQUIRE(again.canonical == ra.canonical);
      REQUIRE(again.cert.is_identity());
    }
}

TEST_CASE("A11 parameter law, exhaustive over GF(p), p <= 13") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const Field f = Field::prime(p);
    for (const auto& a : f.elements()) {
      const CanonResult r = canonicalize(identity_b_pair(a));
      REQUIRE(r.label.tag == FormTag::A11);
      REQUIRE(*r.label.param == square_class_rep(a).rep);
    }
  }
  const Field q = Field::rationals();
  for (int num = -20; num <= 20; ++num)
    for (int den = 1; den <= 6; ++den) {
      const FieldElement a = q.from_fraction(num, den);
      REQUIRE(*canonicalize(identity_b_pair(a)).label.param == square_class_rep(a).rep);
    }
}

TEST_CASE("epsilon conjugation reaches b21 != 0 for non-scalar upper-triangular B") {
  for (std::int64_t p : {3, 5, 7}) {
    const Field f = Field::prime(p);
    const auto els = f.elements();
    for (const auto& b11 : els)
      for (const auto& b12 : els)
        for (const auto& b22 : els) {
          if (b12.is_zero() && b11 == b22) continue;
          ExactMatrix m(f, 2, 2);
          m(0, 0) = b11;
          m(0, 1) = b12;
          m(1, 1) = b22;
          bool reached = false;
          for (const FieldElement& eps : {f.one(), -f.one()}) {
            ExactMatrix left = ExactMatrix::identity(f, 2), right = ExactMatrix::identity(f, 2);
            left(1, 0) = -eps;
            right(1, 0) = eps;
            reached = reached || !(left * m * right)(1, 0).is_zero();
          }
          REQUIRE(reached);
        }
  }
}

TEST_CASE("distinct canonical forms are pairwise inequivalent (oracle)") {
  for (std::int64_t p : {3, 5}) {
    const Field f = Field::prime(p);
    const std::vector<FieldElement> params{f.zero(), f.one(), f.smallest_nonresidue()};
    for (std::size_t x = 0; x < params.size(); ++x) {
      const auto orb = orbit(identity_b_pair(params[x]));
      for (std::size_t y = 0; y < params.size(); ++y) {
        const bool member = std::find(orb.begin(), orb.end(), identity_b_pair(params[y])) != orb.end();
        REQUIRE(member == (x == y));
      }
    }
  }
  const Field f = Field::prime(3);
  const auto orb = orbit(canonical_tensor(f, plain(FormTag::A12)));
  CHECK(std::find(orb.begin(), orb.end(), a12a(f)) == orb.end());
}
