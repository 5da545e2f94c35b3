#pragma once

#include <set>
#include <string>
#include <vector>

#include "flopcalc/character.hpp"

namespace flopcalc {

enum class WindowFamily {
  GflopW,       ///< Grassmannian-flop window: width <= n - k
  MukaiWPrime,  ///< window for Hom(S,V) + Hom(V,S) + End(S), k = 2
  Tseu,         ///< 0 <= gamma_k <= ... <= gamma_1 < n
};

std::string to_string(WindowFamily f);
/// Accepts "W", "Wprime", "Tseu" (case-insensitive) and the enum spellings.
WindowFamily parse_window_family(const std::string& s);

struct WindowSet {
  WindowFamily family;
  int k = 0;
  int n = 0;
  std::set<Weight> members;

  bool contains(const Weight& w) const { return members.count(w) > 0; }
  /// Members in lexicographic order.
  std::vector<Weight> sorted() const { return {members.begin(), members.end()}; }
};

WindowSet generate_window(WindowFamily family, int k, int n);

/// Throws on a length mismatch.
bool membership(const Weight& w, const WindowSet& ws);

/// GL(S_2)-Schur data occurring in the Koszul homology Lambda^. of the rank
/// k(n-k) bundle built from S_2 and V/S_1, at the origin.
struct KoszulRestriction {
  std::set<Weight> weights;
  /// Which of the two dual readings produced `weights`.
  std::string convention;
  std::set<Weight> rejected;
  std::string rejected_convention;
  bool matches_window = false;
};

KoszulRestriction koszul_restriction_weights(int k, int n);

struct TensorCheck {
  bool equal = false;
  bool strict_subset = false;  ///< produced is a proper subset of target
  std::set<Weight> produced;
  std::set<Weight> target;
};

/// Irreducibles in multiplier (x) w for w in GflopW(2, n), compared with
/// MukaiWPrime(2, n).
TensorCheck oc_tensor_check(int n, const std::vector<Weight>& multipliers);
/// The default multipliers {trivial, S_2, det S_2}.
TensorCheck oc_tensor_check(int n);

/// Canonical sorted list for golden files.
std::vector<Weight> serialize(const WindowSet& ws);

}  // namespace flopcalc
