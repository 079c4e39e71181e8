#include <doctest.h>

#include "test_support.hpp"
#include "tricanon/error.hpp"
#include "tricanon/matrix.hpp"

using namespace tricanon;

TEST_CASE("rref examples") {
  const Field q = Field::rationals();
  const ExactMatrix id = ExactMatrix::identity(q, 2);
  RrefResult r = rref(id);
  CHECK(r.echelon == id);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.transform == id);

  const ExactMatrix lower(q, {{0, 0}, {1, 0}});
  r = rref(lower);
  CHECK(r.echelon == ExactMatrix(q, {{1, 0}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.transform == ExactMatrix(q, {{0, 1}, {1, 0}}));

  const ExactMatrix zero(q, 3, 2);
  r = rref(zero);
  CHECK(r.echelon == zero);
  CHECK(r.rank == 0);
  CHECK(r.pivots.empty());
  CHECK(r.transform == ExactMatrix::identity(q, 3));

  CHECK(rank(ExactMatrix(q, 0, 0)) == 0);
  CHECK(rank(ExactMatrix(q, 0, 3)) == 0);
}

TEST_CASE("inverse examples") {
  const Field q = Field::rationals();
  const ExactMatrix d(q, {{2, 0}, {0, 1}});
  ExactMatrix expected(q, 2, 2);
  expected(0, 0) = q.from_fraction(1, 2);
  expected(1, 1) = q.one();
  CHECK(inverse(d) == expected);
  const ExactMatrix swap(q, {{0, 1}, {1, 0}});
  CHECK(inverse(swap) == swap);
  CHECK_THROWS_AS(inverse(ExactMatrix(q, {{1, 1}, {1, 1}})), SingularMatrix);
  CHECK_THROWS_AS(inverse(ExactMatrix(q, 2, 3)), ShapeMismatch);
  CHECK(inverse(ExactMatrix(q, 0, 0)) == ExactMatrix(q, 0, 0));
}

TEST_CASE("determinant agrees with nonsingularity") {
  testing::Random rnd(11);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(5)})
    for (int t = 0; t < 200; ++t) {
      const auto n = static_cast<std::size_t>(rnd.integer(1, 4));
      const ExactMatrix m = rnd.matrix(f, n, n);
      REQUIRE(determinant(m).is_zero() == !is_nonsingular(m));
    }
  const Field q = Field::rationals();
  CHECK(determinant(ExactMatrix(q, {{0, 1}, {1, 0}})) == q.from_int(-1));
  CHECK(determinant(ExactMatrix(q, {{2, 3}, {4, 5}})) == q.from_int(-2));
}

TEST_CASE("rank_of_span examples") {
  const Field q = Field::rationals();
  const std::vector<ExactMatrix> indep{ExactMatrix::identity(q, 2), ExactMatrix(q, {{0, 0}, {1, 0}})};
  CHECK(rank_of_span(indep).rank == 2);

  const ExactMatrix a(q, {{1, 2}, {3, 4}});
  const std::vector<ExactMatrix> prop{a, q.from_int(2) * a};
  const SpanRank s = rank_of_span(prop);
  CHECK(s.rank == 1);
  CHECK(s.basis == std::vector<std::size_t>{0});
  CHECK(s.coordinates(0, 1) == q.from_int(2));

  const std::vector<ExactMatrix> zeros{ExactMatrix(q, 2, 2), ExactMatrix(q, 2, 2)};
  CHECK(rank_of_span(zeros).rank == 0);

  const std::vector<ExactMatrix> lead_zero{ExactMatrix(q, 2, 2), a, a, ExactMatrix::identity(q, 2)};
  CHECK(rank_of_span(lead_zero).basis == std::vector<std::size_t>{1, 3});

  const std::vector<ExactMatrix> bad{ExactMatrix(q, 2, 2), ExactMatrix(q, 2, 3)};
  CHECK_THROWS_AS(rank_of_span(bad), ShapeMismatch);
  CHECK(rank_of_span(std::vector<ExactMatrix>{}).rank == 0);
}

TEST_CASE("rref properties on random matrices") {
  testing::Random rnd(7);
  for (const Field& f : {Field::rationals(), Field::prime(5)})
    for (int t = 0; t < 300; ++t) {
      const auto rows = static_cast<std::size_t>(rnd.integer(0, 4));
      const auto cols = static_cast<std::size_t>(rnd.integer(0, 4));
      ExactMatrix m = rnd.matrix(f, rows, cols);
      if (rnd.chance(0.3) && rows > 1)
        for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * f.from_int(3);
      const RrefResult r = rref(m);
      REQUIRE(r.transform * m == r.echelon);
      REQUIRE(rref(r.echelon).echelon == r.echelon);
      REQUIRE(inverse(r.transform) * r.transform == ExactMatrix::identity(f, rows));
      REQUIRE(rank(m.transpose()) == r.rank);
      for (std::size_t i = 0; i < r.rank; ++i) {
        REQUIRE(r.echelon(i, r.pivots[i]).is_one());
        for (std::size_t k = 0; k < rows; ++k)
          if (k != i) REQUIRE(r.echelon(k, r.pivots[i]).is_zero());
      }
      for (std::size_t i = r.rank; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) REQUIRE(r.echelon(i, j).is_zero());
    }
}

TEST_CASE("span rank matches brute-force span size over GF(3)") {
  testing::Random rnd(3);
  const Field f = Field::prime(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<ExactMatrix> fam;
    const auto count = rnd.integer(1, 4);
    for (long long k = 0; k < count; ++k) fam.push_back(rnd.matrix(f, 2, 2));
    if (count > 2) fam[2] = fam[0] + fam[1];
    std::size_t expected = 1;
    for (std::size_t r = rank_of_span(fam).rank; r > 0; --r) expected *= 3;
    REQUIRE(testing::brute_force_span_size(fam) == expected);
  }
}
