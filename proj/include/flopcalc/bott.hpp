#pragma once

#include <map>
#include <optional>
#include <vector>

#include "flopcalc/character.hpp"

namespace flopcalc {

/// Schur data S^sub(S) (x) S^quot(V/S) of a homogeneous bundle on Gr(k, n),
/// with S the tautological subbundle.
struct GrassmannBundleWeight {
  int k = 0;
  int n = 0;
  Weight sub;
  Weight quot;

  void validate() const;
};

/// Nonvanishing cohomology of a homogeneous bundle: S^weight(V) in a single
/// degree.
struct Cohomology {
  int degree = 0;
  Weight weight;

  bool operator==(const Cohomology&) const = default;
};

/// Core of Bott's algorithm on an arbitrary integer sequence: add rho, sort
/// into strictly decreasing order counting inversions, subtract rho.
/// Empty when the rho-shifted sequence has a repeated entry.
std::optional<Cohomology> bott_sort(const Weight& mu);

std::optional<Cohomology> bott_push(const GrassmannBundleWeight& w);

/// Pushes every irreducible of a character of GL(k) x GL(n-k) (blocks ordered
/// sub, quot) to Gr(k, n). Returns degree -> GL(n) character.
std::map<int, Character> bott_push(const Character& levi_character);

/// Weight data on the flag bundle Fl(k', k, V) -> Gr(k, V): Schur data on S'
/// (rank k'), on S/S' (rank k - k'), and spectator data carried along.
struct FlagBundleWeight {
  Weight fibre_sub;
  Weight fibre_quot;
  Weight spectator;
};

struct RelativePush {
  int degree = 0;
  Weight s;  ///< Schur data on the rank-k bundle S
  Weight spectator;

  bool operator==(const RelativePush&) const = default;
};

/// Fibrewise Bott along the Gr(k', S)-bundle. Empty when fibrewise acyclic.
std::vector<RelativePush> relative_bott_push(const FlagBundleWeight& w);

}  // namespace flopcalc
