#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flopcalc/character.hpp"

namespace flopcalc {

/// R-charge carried by one degree of the endomorphism coordinates p, in the
/// normalization where the superpotential has R-charge 2.
inline constexpr int kDefaultPRCharge = 2;

/// Degree-free identity of a summand S^s1(S_1) (x) S^s2(S_2) (x) O(a, b).
struct BundleKey {
  Weight s1;
  Weight s2;
  std::array<int, 2> twist{};

  Weight s1_weight() const;
  Weight s2_weight() const;
  /// Canonical form from full weights: each Schur part ends in 0.
  static BundleKey from_weights(const Weight& w1, const Weight& w2);

  auto operator<=>(const BundleKey&) const = default;
};

/// One summand of a resolution, with homological degree and R-charge kept
/// separate.
struct BundleTerm {
  BundleKey key;
  int hdeg = 0;
  int rcharge = 0;

  static BundleTerm make(const Weight& w1, const Weight& w2, int hdeg, int rcharge) {
    return BundleTerm{BundleKey::from_weights(w1, w2), hdeg, rcharge};
  }

  /// Column on the page once R-charge is folded into the homological degree:
  /// a map of R-charge r between adjacent homological degrees spans r - 1
  /// extra columns.
  int position() const { return hdeg - rcharge; }

  auto operator<=>(const BundleTerm&) const = default;
};

enum class Layout { Homological, Flattened };

/// column -> multiset of summands
using ColumnMultiset = std::map<int, std::map<BundleKey, int>>;

/// A complex with its differentials forgotten.
struct GradedTermList {
  std::string label;
  int rank1 = 2;
  int rank2 = 2;
  std::vector<BundleTerm> terms;

  ColumnMultiset columns(Layout layout) const;
  /// E[s]: every term moves from hdeg h to h - s.
  GradedTermList shifted(int s) const;
  /// Sum over terms of (-1)^column [term], as a GL(S_1) x GL(S_2) character.
  Character alternating_character(Layout layout) const;
  void sort();
};

/// Koszul complex of a regular section of `bundle` (a GL(S_1) x GL(S_2)
/// character) carrying R-charge `section_rcharge`: Lambda^j(bundle^dual) in
/// homological degree -j with R-charge -j * section_rcharge.
GradedTermList koszul_terms(const Character& bundle, int section_rcharge,
                            const std::string& label = "koszul");

/// Hom(S_2, S_1) as a GL(2) x GL(2) character.
Character hom_s2_s1();

// -- Weyman's geometric technique over a Grassmannian of a vector space H --

/// Schur functor together with its degree in the p coordinates.
struct SchurPiece {
  Weight weight;
  int pdeg = 0;
};

/// Springer-type desingularization: a subbundle (built from the tautological
/// U on Gr(k, H)) of a trivial bundle with fibre `ambient`.
struct SpringerDatum {
  int dim_h = 0;
  int k = 0;
  std::vector<SchurPiece> ambient;    ///< GL(H) weights
  std::vector<SchurPiece> subbundle;  ///< GL(U) weights

  void validate() const;
};

/// Lambda^2 H + H on Gr(2, H), dim H = 4, with subbundle det U + U.
SpringerDatum plucker_springer_datum();

struct HTerm {
  Weight weight;  ///< GL(H) weight
  int hdeg = 0;
  int rcharge = 0;

  auto operator<=>(const HTerm&) const = default;
};

struct EquivariantResolution {
  std::string label;
  int dim_h = 0;
  std::vector<HTerm> terms;

  std::map<int, Character> by_hdeg() const;
  /// Ranks of F_0, F_1, ... (F_i in homological degree -i).
  std::vector<std::int64_t> ranks() const;
};

/// F_i = sum_j H^j(Gr, Lambda^{i+j} xi), xi = (ambient / subbundle)^dual.
/// Cohomology is computed on the associated graded of xi; when a graded piece
/// of xi is a nonsplit extension, equal weights of the same multi-degree in
/// neighbouring cohomological degrees are cancelled unless
/// `collapse_extensions` is false. Throws if any cohomology lands in positive
/// homological degree.
EquivariantResolution weyman_resolution(const SpringerDatum& d, int p_rcharge = kDefaultPRCharge,
                                        bool collapse_extensions = true);

/// Substitutes H = Hom(S_2, S_1) = S_1 (x) S_2^dual and twists each term by
/// O(1, -1) per p-degree, the coordinates p living in
/// Lambda^2 H (x) O(-1, 1) = End_0(S_1) + End_0(S_2).
GradedTermList specialize_h(const EquivariantResolution& r, int p_rcharge = kDefaultPRCharge);

/// GL(S_2)-weights (full, twist included) appearing in a complex.
std::set<Weight> s2_contents(const GradedTermList& c);
std::set<Weight> s1_contents(const GradedTermList& c);

/// GL(S_2) weights occurring in the resolution of O_C.
std::set<Weight> oc_weights();

// -- the k = 2 complexes --

enum class ComplexId { I0, I1, I2, DeltaBar, OC };

std::string to_string(ComplexId id);
ComplexId parse_complex_id(const std::string& s);

/// Resolution of (pi_1)_* O_{I_1}: three Koszul complexes on the flag bundle
/// Fl(1, 2, V), pushed down fibrewise.
GradedTermList pushdown_i1(int p_rcharge = kDefaultPRCharge);

/// Cone of the trace difference (p-degree 1) between two copies of `c`.
GradedTermList trace_cone(const GradedTermList& c, int p_rcharge = kDefaultPRCharge);

GradedTermList build_complex(ComplexId which, int p_rcharge = kDefaultPRCharge);

// -- convolution and term-level cancellation --

struct ConvolutionRow {
  GradedTermList complex;
  int offset = 0;  ///< added to each term's flattened position
};

/// A summand in row `source_row`, column `column`, cancelled against the
/// identical summand of row `source_row + 1` in column `column + 1`.
struct CancelledPair {
  int source_row = 0;
  int column = 0;
  BundleKey key;

  auto operator<=>(const CancelledPair&) const = default;
};

struct CancellationResult {
  bool matched = false;  ///< residual equals the target (always true without target)
  ColumnMultiset residual;
  std::vector<CancelledPair> pairs;
  bool kclass_conserved = false;
};

/// Rows are given in convolution order: differentials run from row i to row
/// i + 1 and raise the column by one. Without a target the maximal
/// cancellation is returned.
CancellationResult convolve_and_cancel(const std::vector<ConvolutionRow>& rows,
                                       const std::optional<ColumnMultiset>& target = std::nullopt);

/// Offsets for I_k, ..., I_0 given by the shifts [-(i^2 + i)] placed in outer
/// degree -i: row I_i moves by i^2.
std::vector<int> tric_offsets(int k);

struct AlignmentSearch {
  std::vector<std::vector<int>> closing_offsets;
};

/// Tries every offset vector with entries in [-range, range].
AlignmentSearch search_alignments(const std::vector<GradedTermList>& rows, const ColumnMultiset& target,
                                  int range = 8);

struct NormalizationReport {
  int p_rcharge = 0;
  std::vector<int> predicted_offsets;
  bool closes_at_predicted = false;
  CancellationResult at_predicted;
  AlignmentSearch search;
};

/// Runs the k = 2 cancellation (I_2, I_1, I_0 against the resolution of the
/// closure of the diagonal) for one normalization of the p R-charge.
NormalizationReport cancellation_for_unit(int p_rcharge, int range = 8);

}  // namespace flopcalc
