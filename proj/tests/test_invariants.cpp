#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "flopcalc/invariants.hpp"
#include "properties.hpp"

using namespace flopcalc;

namespace {

// Multiplicity of the trivial GL(2)-module in
// (x) Sym^r_i(S) (x) Sym^c_j(S^dual) (x) Sym^p(S (x) S^dual).
std::int64_t character_count(const Multidegree& d) {
  const Shape g = Shape::gl(2);
  const Character s = Character::irreducible(g, {1, 0}), sd = Character::irreducible(g, {0, -1});
  Character acc = Character::trivial(g);
  for (int r : d.rows) acc = tensor(acc, symmetric_power(r, s));
  for (int c : d.cols) acc = tensor(acc, symmetric_power(c, sd));
  acc = tensor(acc, symmetric_power(d.pdeg, tensor(s, sd)));
  return acc.multiplicity({0, 0});
}

Polynomial variable(int v, int count) {
  Monomial m(count, 0);
  m[v] = 1;
  return {{m, 1}};
}

}  // namespace

TEST_CASE("the generators are invariant") {
  for (int n = 1; n <= 3; ++n) {
    const PolyRingSpec spec{n};
    const auto gens = standard_generators(n);
    CHECK(gens.generators.size() == static_cast<std::size_t>(2 * n * n + 2));
    for (const auto& g : gens.generators) {
      INFO(g.name);
      CHECK(is_invariant(spec, g.poly));
    }
  }
}

TEST_CASE("negative control: a lone coordinate is not invariant") {
  const PolyRingSpec spec{2};
  CHECK_FALSE(is_invariant(spec, variable(spec.x_index(0, 0), spec.variable_count())));
  CHECK_FALSE(is_invariant(spec, variable(spec.p_index(0, 0), spec.variable_count())));
  // p_00 - p_11 is killed by the torus but not by E_12.
  Polynomial f = variable(spec.p_index(0, 0), spec.variable_count());
  f[variable(spec.p_index(1, 1), spec.variable_count()).begin()->first] = -1;
  CHECK_FALSE(is_invariant(spec, f));
}

TEST_CASE("invariant dimensions agree with character multiplicities") {
  for (int n = 1; n <= 2; ++n) {
    const PolyRingSpec spec{n};
    for (const auto& d : multidegrees_up_to(n, n == 1 ? 6 : 4)) {
      INFO(to_string(d));
      CHECK(invariant_dimension(spec, d) == character_count(d));
    }
  }
}

TEST_CASE("p-only invariants are polynomials in tr p and det p") {
  const PolyRingSpec spec{1};
  for (int p = 0; p <= 6; ++p) {
    const Multidegree d{{0}, {0}, p};
    CHECK(invariant_dimension(spec, d) == p / 2 + 1);
    CHECK(subalgebra_dimension(spec, standard_generators(1), d) == p / 2 + 1);
  }
}

TEST_CASE("x p^2 y is reached through Cayley-Hamilton") {
  const PolyRingSpec spec{1};
  const Multidegree d{{1}, {1}, 2};
  CHECK(invariant_dimension(spec, d) == 3);
  CHECK(subalgebra_dimension(spec, standard_generators(1), d) == 3);
}

TEST_CASE("standard generators span every tested multidegree") {
  for (const auto& [n, deg] : {std::pair{1, 6}, std::pair{2, 4}, std::pair{3, 3}}) {
    const auto r = verify_generators(n, deg);
    INFO("n=" << n);
    CHECK(r.generators_invariant);
    CHECK(r.discrepancies.empty());
    CHECK(r.passed());
    CHECK(r.checks.size() == multidegrees_up_to(n, deg).size());
  }
}

TEST_CASE("dropping det p leaves a gap in p-degree 2") {
  const auto r = verify_generators(generators_without_det(1), 4);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.discrepancies.empty());
  const auto& first = r.discrepancies.front();
  CHECK(first.degree == Multidegree{{0}, {0}, 2});
  CHECK(first.invariant == 2);
  CHECK(first.generated == 1);
}

TEST_CASE("property: generated never exceeds invariant") {
  props::Tally t;
  for (int n = 1; n <= 2; ++n) {
    const PolyRingSpec spec{n};
    for (const auto& c : verify_generators(n, n == 1 ? 6 : 4).checks)
      t.record(c.generated <= c.invariant && c.generated >= 0, to_string(c.degree));
  }
  CHECK(t.cases >= 200);
  CHECK(t.ok());
}

TEST_CASE("property: invariant dimension is symmetric under permuting V") {
  std::mt19937 rng(51);
  const PolyRingSpec spec{3};
  std::uniform_int_distribution<int> part(0, 1), pd(0, 1);
  props::Tally t;
  for (int i = 0; i < 200; ++i) {
    Multidegree d{{part(rng), part(rng), part(rng)}, {part(rng), part(rng), part(rng)}, pd(rng)};
    std::vector<int> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    Multidegree e = d;
    for (int j = 0; j < 3; ++j) {
      e.rows[j] = d.rows[perm[j]];
      e.cols[j] = d.cols[perm[j]];
    }
    t.record(invariant_dimension(spec, d) == invariant_dimension(spec, e), to_string(d));
  }
  INFO(t.first_failure);
  CHECK(t.ok());
}

TEST_CASE("multidegree enumeration") {
  const auto ds = multidegrees_up_to(1, 2);
  CHECK(ds.front() == Multidegree{{0}, {0}, 0});
  for (std::size_t i = 1; i < ds.size(); ++i) CHECK(ds[i - 1].total() <= ds[i].total());
  // Three counts (row, column, p) summing to at most 2.
  CHECK(ds.size() == 10);
}

TEST_CASE("limits") {
  PolyRingSpec spec{2};
  spec.max_block = 5;
  CHECK_THROWS_AS(invariant_dimension(spec, Multidegree{{1, 1}, {1, 1}, 2}), Error);
  CHECK_THROWS_AS(verify_generators(4, 2), Error);
  CHECK_THROWS_AS(verify_generators(1, 9), Error);
}
