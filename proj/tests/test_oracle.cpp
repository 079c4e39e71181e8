#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "test_support.hpp"
#include "tricanon/canonicalizer.hpp"
#include "tricanon/error.hpp"
#include "tricanon/oracle.hpp"

using namespace tricanon;

namespace {

std::size_t closure_size(const std::vector<ExactMatrix>& gens, const Field& f, std::size_t n) {
  auto key = [](const ExactMatrix& m) {
    std::vector<std::int64_t> k;
    for (const auto& x : m.entries()) k.push_back(x.residue());
    return k;
  };
  std::set<std::vector<std::int64_t>> seen{key(ExactMatrix::identity(f, n))};
  std::deque<ExactMatrix> queue{ExactMatrix::identity(f, n)};
  while (!queue.empty()) {
    const ExactMatrix x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      ExactMatrix y = x * g;
      if (seen.insert(key(y)).second) queue.push_back(std::move(y));
    }
  }
  return seen.size();
}

std::uint64_t gl_order(std::uint64_t p, std::size_t n) {
  std::uint64_t pn = 1, order = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= p;
  std::uint64_t pk = 1;
  for (std::size_t k = 0; k < n; ++k) {
    order *= pn - pk;
    pk *= p;
  }
  return order;
}

}  // namespace

TEST_CASE("gl_generators") {
  const Field gf3 = Field::prime(3);
  const auto g1 = gl_generators(1, gf3);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == ExactMatrix(gf3, {{2}}));
  CHECK(closure_size(gl_generators(2, gf3), gf3, 2) == 48);
  const Field gf5 = Field::prime(5);
  CHECK(closure_size(gl_generators(2, gf5), gf5, 2) == 480);
  CHECK(closure_size(gl_generators(3, gf3), gf3, 3) == gl_order(3, 3));
  CHECK(gl_generators(0, gf3).empty());
  CHECK_THROWS_AS(gl_generators(2, Field::rationals()), UnsupportedField);
}

TEST_CASE("tensor codes") {
  const Field f = Field::prime(3);
  testing::Random rnd(47);
  for (int t = 0; t < 50; ++t) {
    const Dims d = rnd.dims(4, 2, 2);
    const SpatialMatrix a = rnd.tensor(f, d);
    REQUIRE(decode_tensor(f, d, encode_tensor(a)) == a);
  }
  SpatialMatrix first(f, 1, 1, 2);
  first(0, 0, 0) = f.one();
  CHECK(encode_tensor(first) == 3);
  CHECK_THROWS_AS(encode_tensor(SpatialMatrix(Field::rationals(), 1, 1, 1)), UnsupportedField);
}

TEST_CASE("generator action agrees with apply_equivalence") {
  for (std::int64_t p : {3, 5}) {
    const Field f = Field::prime(p);
    testing::Random rnd(53);
    for (const Dims d : {Dims{3, 2, 2}, Dims{2, 1, 2}, Dims{1, 2, 2}, Dims{4, 2, 2}}) {
      const GeneratorAction action(f, d);
      for (int t = 0; t < 5; ++t) {
        const SpatialMatrix a = rnd.tensor(f, d);
        for (std::size_t g = 0; g < action.generator_count(); ++g)
          REQUIRE(decode_tensor(f, d, action.apply(g, encode_tensor(a))) ==
                  apply_equivalence(a, action.certificate(g)));
      }
    }
  }
}

TEST_CASE("orbit") {
  const Field f = Field::prime(3);
  CHECK(orbit(SpatialMatrix(f, 2, 2, 2)).size() == 1);
  const auto o9 = orbit(canonical_tensor(f, {FormTag::A9, std::nullopt}));
  REQUIRE(o9.size() == 2);
  CHECK(o9[0](0, 0, 0) == f.one());
  CHECK(o9[1](0, 0, 0) == f.from_int(2));

  const SpatialMatrix b1 = identity_b_pair(f.one());
  const auto ob = orbit(b1);
  testing::Random rnd(59);
  for (int t = 0; t < 30; ++t) {
    const SpatialMatrix moved = apply_equivalence(b1, rnd.certificate(f, b1.dims()));
    REQUIRE(std::binary_search(ob.begin(), ob.end(), moved, [](const auto& x, const auto& y) {
      return encode_tensor(x) < encode_tensor(y);
    }));
  }
  const std::uint64_t group = gl_order(3, 2) * gl_order(3, 2) * gl_order(3, 2);
  CHECK(group % ob.size() == 0);
  CHECK_THROWS_AS(orbit(SpatialMatrix(Field::rationals(), 1, 1, 1)), UnsupportedField);
}

TEST_CASE("classify_all small spaces") {
  const Field f = Field::prime(3);
  Classification c = classify_all(f, {1, 1, 1});
  REQUIRE(c.classes.size() == 2);
  CHECK(c.classes[0].size == 1);
  CHECK(c.classes[1].size == 2);

  c = classify_all(f, {1, 2, 2});
  REQUIRE(c.classes.size() == 3);
  const std::vector<CanonicalLabel> expected{
      {FormTag::Zero, std::nullopt}, {FormTag::A9, std::nullopt}, {FormTag::A10b, std::nullopt}};
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    CHECK(canonicalize(c.classes[i].representative).label == expected[i]);
    sum += c.classes[i].size;
  }
  CHECK(sum == 81);
}

TEST_CASE("classify_all GF(3) 2x2x2") {
  const Field f = Field::prime(3);
  const Classification c = classify_all(f, {2, 2, 2});
  std::uint64_t sum = 0;
  const std::uint64_t group = gl_order(3, 2) * gl_order(3, 2) * gl_order(3, 2);
  std::size_t regular = 0;
  for (const auto& cls : c.classes) {
    sum += cls.size;
    CHECK(group % cls.size == 0);
    regular += is_regular(cls.representative);
  }
  CHECK(sum == 6561);
  // Regular parts Zero, A9, A10, A10a, A10b and A11(a) for the square classes {0, 1, 2}.
  CHECK(c.classes.size() == 8);
  CHECK(regular == 3);

  const Classification threaded = classify_all(f, {2, 2, 2}, kDefaultEnumerationBudget, 3);
  CHECK(threaded.class_of_code == c.class_of_code);
  REQUIRE(threaded.classes.size() == c.classes.size());
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    CHECK(threaded.classes[i].representative_code == c.classes[i].representative_code);
    CHECK(threaded.classes[i].size == c.classes[i].size);
  }
}

TEST_CASE("classify_all budget") {
  CHECK_THROWS_AS(classify_all(Field::prime(3), {2, 2, 2}, 6560), BudgetExceeded);
  CHECK_THROWS_AS(classify_all(Field::prime(7), {4, 2, 2}), BudgetExceeded);
  CHECK_THROWS_AS(classify_all(Field::rationals(), {1, 1, 1}), UnsupportedField);
}
