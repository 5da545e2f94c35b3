#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flopcalc/character.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace flopcalc;

namespace {

Character gl(int k, std::initializer_list<std::pair<Weight, std::int64_t>> terms) {
  Character c(Shape::gl(k));
  for (const auto& [w, m] : terms) c.add(w, m);
  return c;
}

TorusMultiset multiset(int k, std::initializer_list<Weight> ws) {
  TorusMultiset t{Shape::gl(k), {}};
  for (const auto& w : ws) t.add(w, 1);
  return t;
}

}  // namespace

TEST_CASE("schur_dim on small weights") {
  CHECK(schur_dim({0, 0}) == 1);
  CHECK(schur_dim({1, 0}) == 2);
  // Semistandard tableaux of shape (2,1) on three letters: 7 distinct contents.
  CHECK(oracle::ssyt_contents({2, 1}, 3).size() == 7);
  std::int64_t count = 0;
  for (const auto& [v, c] : oracle::ssyt_contents({2, 1}, 3)) count += c;
  CHECK(count == 8);
  CHECK(schur_dim({2, 1, 0}) == count);
  CHECK(schur_dim({-1, -3}) == 3);
}

TEST_CASE("torus weights of GL2 modules") {
  CHECK(torus_weights({1, 0}) == multiset(2, {{1, 0}, {0, 1}}));
  CHECK(torus_weights({1, 1}) == multiset(2, {{1, 1}}));
  CHECK(torus_weights({2, 0}) == multiset(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(torus_weights({0, -1}) == multiset(2, {{0, -1}, {-1, 0}}));
}

TEST_CASE("torus weights agree with tableau enumeration") {
  for (const Weight& w : {Weight{3, 1, 0}, Weight{2, 2, -1}, Weight{1, 0, 0, -2}, Weight{4, 2}}) {
    const auto tw = torus_weights(w);
    std::map<Weight, std::int64_t> got(tw.counts.begin(), tw.counts.end());
    CHECK(got == oracle::weights_by_tableaux(w));
  }
}

TEST_CASE("decompose strips highest weights") {
  CHECK(decompose(multiset(2, {{1, 1}})) == gl(2, {{{1, 1}, 1}}));
  CHECK(decompose(multiset(2, {{2, 0}, {1, 1}, {1, 1}, {0, 2}})) == gl(2, {{{2, 0}, 1}, {{1, 1}, 1}}));
  CHECK(decompose(torus_weights({2, 1, 0})) == gl(3, {{{2, 1, 0}, 1}}));

  TorusMultiset virt{Shape::gl(2), {}};
  virt.add({1, 1}, -1);
  CHECK(decompose(virt) == gl(2, {{{1, 1}, -1}}));

  CHECK_THROWS_AS(decompose(multiset(2, {{0, 1}})), Error);
}

TEST_CASE("tensor products") {
  const Shape g2 = Shape::gl(2), g3 = Shape::gl(3);
  CHECK(tensor(Character::irreducible(g2, {1, 0}), Character::irreducible(g2, {1, 0})) ==
        gl(2, {{{2, 0}, 1}, {{1, 1}, 1}}));
  CHECK(tensor(Character::irreducible(g2, {1, 0}), Character::irreducible(g2, {1, 1})) == gl(2, {{{2, 1}, 1}}));
  CHECK(tensor(Character::irreducible(g3, {1, 0, 0}), Character::irreducible(g3, {1, 1, 0})) ==
        gl(3, {{{2, 1, 0}, 1}, {{1, 1, 1}, 1}}));
  CHECK_THROWS_AS(tensor(Character::irreducible(g2, {1, 0}), Character::irreducible(g3, {1, 0, 0})), Error);
}

TEST_CASE("exterior powers") {
  const Shape g2 = Shape::gl(2);
  const Character std2 = Character::irreducible(g2, {1, 0});
  CHECK(exterior_power(0, std2 + std2) == Character::trivial(g2));
  CHECK(exterior_power(2, std2) == gl(2, {{{1, 1}, 1}}));

  // Wedges of pairs from the basis weights (1,0), (0,1), (1,0), (0,1).
  const std::vector<Weight> basis = {{1, 0}, {0, 1}, {1, 0}, {0, 1}};
  TorusMultiset wedges{g2, {}};
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) wedges.add({basis[i][0] + basis[j][0], basis[i][1] + basis[j][1]}, 1);
  const Character l2 = exterior_power(2, std2 + std2);
  CHECK(l2 == decompose(wedges));
  CHECK(l2 == gl(2, {{{2, 0}, 1}, {{1, 1}, 3}}));

  CHECK_THROWS_AS(exterior_power(1, std2 * -1), Error);
}

TEST_CASE("symmetric powers") {
  const Character std2 = Character::irreducible(Shape::gl(2), {1, 0});
  CHECK(symmetric_power(2, std2) == gl(2, {{{2, 0}, 1}}));
  CHECK(symmetric_power(3, std2).dimension() == 4);
}

TEST_CASE("cauchy_exterior") {
  const auto two = cauchy_exterior(2, 2, 2);
  CHECK(two.size() == 2);
  CHECK(std::find(two.begin(), two.end(), std::pair<Weight, Weight>{{2, 0}, {1, 1}}) != two.end());
  CHECK(std::find(two.begin(), two.end(), std::pair<Weight, Weight>{{1, 1}, {2, 0}}) != two.end());
  const auto zero = cauchy_exterior(0, 2, 3);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].first == Weight{0, 0});
  CHECK(cauchy_exterior(7, 2, 3).empty());

  // n = 4: Lambda^2 of the standard of GL(2) x GL(2).
  const Shape s = Shape::product({2, 2});
  Character expect(s);
  for (const auto& [l, c] : cauchy_exterior(2, 2, 2)) expect.add(concat(l, c), 1);
  CHECK(exterior_power(2, Character::irreducible(s, {1, 0, 1, 0})) == expect);
}

TEST_CASE("cauchy_exterior reproduces exterior powers for k <= 3, d <= 4") {
  for (int k = 1; k <= 3; ++k)
    for (int d = 1; d <= 4; ++d) {
      const Shape s = Shape::product({k, d});
      Weight a(k, 0), b(d, 0);
      a[0] = b[0] = 1;
      const Character ab = Character::irreducible(s, concat(a, b));
      for (int m = 0; m <= k * d; ++m) {
        Character expect(s);
        for (const auto& [l, c] : cauchy_exterior(m, k, d)) expect.add(concat(l, c), 1);
        CHECK(exterior_power(m, ab) == expect);
      }
    }
}

TEST_CASE("dualize") {
  CHECK(dualize(gl(2, {{{1, 1}, 1}})) == gl(2, {{{-1, -1}, 1}}));
  CHECK(dualize(gl(2, {{{0, 0}, 1}})) == gl(2, {{{0, 0}, 1}}));
  std::mt19937 rng(7);
  const Character c = props::random_character(Shape::gl(3), 10, -3, 3, rng);
  CHECK(dualize(dualize(c)) == c);
}

TEST_CASE("restriction to a Levi subgroup") {
  // Lambda^2 of GL(4) on GL(2) x GL(2): Lambda^2 A + A (x) B + Lambda^2 B.
  const Character r = restrict_to(Character::irreducible(Shape::gl(4), {1, 1, 0, 0}), Shape::product({2, 2}));
  Character expect(Shape::product({2, 2}));
  expect.add({1, 1, 0, 0}, 1);
  expect.add({1, 0, 1, 0}, 1);
  expect.add({0, 0, 1, 1}, 1);
  CHECK(r == expect);
}

TEST_CASE("property: round trip through torus weights") {
  const auto t = props::round_trip(300, 11);
  INFO(t.first_failure);
  CHECK(t.cases >= 200);
  CHECK(t.ok());
}

TEST_CASE("property: tensor is commutative and associative") {
  const auto t = props::tensor_laws(200, 12);
  INFO(t.first_failure);
  CHECK(t.ok());
}

TEST_CASE("property: random Cauchy cases") {
  const auto t = props::cauchy_cases(200, 13);
  INFO(t.first_failure);
  CHECK(t.ok());
}

TEST_CASE("property: exterior algebra has dimension 2^dim") {
  const auto t = props::exterior_dimensions(200, 14);
  INFO(t.first_failure);
  CHECK(t.ok());
}

TEST_CASE("property: schur_dim counts torus weights") {
  std::mt19937 rng(15);
  for (int i = 0; i < 200; ++i) {
    const Weight w = props::random_dominant(1 + i % 4, -3, 3, rng);
    CHECK(schur_dim(w) == torus_weights(w).cardinality());
  }
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(Character::irreducible(Shape::gl(2), {0, 1}), Error);
  CHECK_THROWS_AS(Character::irreducible(Shape::gl(2), {1, 0, 0}), Error);
}
