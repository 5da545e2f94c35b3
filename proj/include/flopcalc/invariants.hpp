#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flopcalc/character.hpp"

namespace flopcalc {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial functions on Hom(S, V) + Hom(V, S) + End(S) with dim S = 2,
/// dim V = n. Variables: x_{i,a} (n x 2), y_{a,i} (2 x n), p_{ab} (2 x 2).
struct PolyRingSpec {
  int n = 1;
  /// Largest block (number of monomials) the linear algebra will accept.
  std::size_t max_block = 20000;

  int variable_count() const { return 4 * n + 4; }
  int x_index(int i, int a) const { return 2 * i + a; }
  int y_index(int a, int i) const { return 2 * n + 2 * i + a; }
  int p_index(int a, int b) const { return 4 * n + 2 * a + b; }
  std::string variable_name(int v) const;
};

/// Degree in row i of x, in column j of y, and in p.
struct Multidegree {
  std::vector<int> rows;
  std::vector<int> cols;
  int pdeg = 0;

  int total() const;
  Multidegree operator+(const Multidegree& o) const;
  bool operator==(const Multidegree&) const = default;
  auto operator<=>(const Multidegree&) const = default;
};

std::string to_string(const Multidegree& d);

using Monomial = std::vector<std::uint8_t>;
using Polynomial = std::map<Monomial, Rational>;

Polynomial multiply(const Polynomial& a, const Polynomial& b);
Multidegree multidegree_of(const PolyRingSpec& spec, const Monomial& m);

/// All monomials of a multidegree, in lexicographic order.
std::vector<Monomial> monomials(const PolyRingSpec& spec, const Multidegree& d);

/// Action of E_{st} in gl(S) as a derivation.
Polynomial apply_gl2(const PolyRingSpec& spec, int s, int t, const Polynomial& f);

/// Annihilated by E_11, E_22, E_12 and E_21.
bool is_invariant(const PolyRingSpec& spec, const Polynomial& f);

struct Generator {
  std::string name;
  Polynomial poly;
  Multidegree degree;
};

struct GeneratorSet {
  int n = 1;
  std::vector<Generator> generators;
};

/// Entries of xy and xpy, det p and tr p.
GeneratorSet standard_generators(int n);
/// The same set with det p removed.
GeneratorSet generators_without_det(int n);

std::int64_t invariant_dimension(const PolyRingSpec& spec, const Multidegree& d);
std::int64_t subalgebra_dimension(const PolyRingSpec& spec, const GeneratorSet& gens, const Multidegree& d);

struct MultidegreeCheck {
  Multidegree degree;
  std::int64_t invariant = 0;
  std::int64_t generated = 0;
};

struct GeneratorReport {
  int n = 0;
  int max_total_degree = 0;
  bool generators_invariant = false;
  std::vector<MultidegreeCheck> checks;
  std::vector<MultidegreeCheck> discrepancies;

  bool passed() const { return generators_invariant && discrepancies.empty(); }
};

/// Multidegrees of total degree <= max_total_degree, ordered by total degree
/// and then lexicographically.
std::vector<Multidegree> multidegrees_up_to(int n, int max_total_degree);

GeneratorReport verify_generators(const GeneratorSet& gens, int max_total_degree);
GeneratorReport verify_generators(int n, int max_total_degree);

}  // namespace flopcalc
