#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flopcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer weight vector. For a dominant weight of GL(k) the parts are weakly
/// decreasing; for a product group the blocks are concatenated.
using Weight = std::vector<int>;

/// Ranks of the factors of GL(r_1) x ... x GL(r_m).
struct Shape {
  std::vector<int> ranks;

  static Shape gl(int k) { return Shape{{k}}; }
  static Shape product(std::vector<int> ranks) { return Shape{std::move(ranks)}; }

  int total() const;
  int factors() const { return static_cast<int>(ranks.size()); }
  /// Offset of factor i inside a concatenated weight.
  int offset(int factor) const;

  bool operator==(const Shape&) const = default;
};

bool is_dominant(const Weight& w);
bool is_dominant(const Weight& w, const Shape& shape);

/// Slice of a concatenated weight belonging to one factor.
Weight block(const Weight& w, const Shape& shape, int factor);
Weight concat(const Weight& a, const Weight& b);

/// Multiset of torus weights, stored as weight -> count. Counts may be
/// negative for virtual representations.
struct TorusMultiset {
  Shape shape;
  std::map<Weight, std::int64_t> counts;

  std::int64_t cardinality() const;
  void add(const Weight& w, std::int64_t c);
  bool operator==(const TorusMultiset&) const = default;
};

/// Virtual character of a product of general linear groups: dominant weight
/// -> nonzero integer multiplicity.
class Character {
 public:
  explicit Character(Shape shape);

  static Character trivial(const Shape& shape);
  static Character irreducible(const Shape& shape, Weight w);

  const Shape& shape() const { return shape_; }
  const std::map<Weight, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::int64_t multiplicity(const Weight& w) const;

  void add(const Weight& w, std::int64_t m);
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character operator*(std::int64_t s) const;

  bool is_genuine() const;
  std::int64_t dimension() const;

  bool operator==(const Character&) const = default;

 private:
  Shape shape_;
  std::map<Weight, std::int64_t> terms_;
};

/// Weyl dimension formula for an irreducible GL(k) representation.
std::int64_t schur_dim(const Weight& w);
std::int64_t schur_dim(const Weight& w, const Shape& shape);

TorusMultiset torus_weights(const Weight& w);
TorusMultiset torus_weights(const Weight& w, const Shape& shape);
TorusMultiset torus_weights(const Character& c);

/// Highest-weight stripping. Throws Error if the multiset is not the
/// restriction of a (virtual) character.
Character decompose(const TorusMultiset& tw);

Character tensor(const Character& a, const Character& b);
/// External tensor product: a character of G x H from characters of G and H.
Character outer(const Character& a, const Character& b);
Character dualize(const Character& c);
Character exterior_power(int m, const Character& c);
Character symmetric_power(int m, const Character& c);

/// Reinterpret a character on a finer block structure, i.e. restrict to a
/// Levi subgroup GL(r_1) x GL(r_2) x ... of the ambient GL(sum r_i). Blocks of
/// `finer` must subdivide those of c.shape() in order.
Character restrict_to(const Character& c, const Shape& finer);

/// Transverse transpose of a partition, padded to `length` parts.
Weight conjugate_partition(const Weight& lambda, int length);

/// Summands of the Cauchy decomposition of Lambda^m(A (x) B) for dim A = k,
/// dim B = d: pairs (lambda, lambda') with lambda a partition of m.
std::vector<std::pair<Weight, Weight>> cauchy_exterior(int m, int k, int d);

/// All partitions of m with at most `max_rows` parts, each at most `max_part`,
/// padded with zeros to `max_rows` entries.
std::vector<Weight> partitions_in_box(int m, int max_rows, int max_part);

std::string to_string(const Weight& w);

}  // namespace flopcalc
