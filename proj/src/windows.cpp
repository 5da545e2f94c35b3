#include "flopcalc/windows.hpp"

#include <algorithm>
#include <cctype>

namespace flopcalc {

namespace {

void check_kn(int k, int n) {
  if (!(0 < k && k < n)) throw Error("window requires 0 < k < n");
}

std::set<Weight> box(int k, int width) {
  std::set<Weight> out;
  for (int m = 0; m <= k * width; ++m)
    for (auto& w : partitions_in_box(m, k, width)) out.insert(w);
  return out;
}

// Sym^a S (x) (det S)^l has GL(2) weight (a + l, l).
std::set<Weight> sym_det_window(int bound) {
  std::set<Weight> out;
  for (int l = 0; l < bound; ++l)
    for (int a = 0; a + l < bound; ++a) out.insert({a + l, l});
  return out;
}

}  // namespace

std::string to_string(WindowFamily f) {
  switch (f) {
    case WindowFamily::GflopW: return "W";
    case WindowFamily::MukaiWPrime: return "Wprime";
    case WindowFamily::Tseu: return "Tseu";
  }
  return "?";
}

WindowFamily parse_window_family(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "w" || t == "gflop_w" || t == "gflopw") return WindowFamily::GflopW;
  if (t == "wprime" || t == "w'" || t == "mukai_wprime" || t == "mukaiwprime")
    return WindowFamily::MukaiWPrime;
  if (t == "tseu") return WindowFamily::Tseu;
  throw Error("unknown window family: " + s);
}

WindowSet generate_window(WindowFamily family, int k, int n) {
  check_kn(k, n);
  WindowSet ws{family, k, n, {}};
  switch (family) {
    case WindowFamily::GflopW:
      // k = 2: l >= 0, a + l < n - 1.
      ws.members = k == 2 ? sym_det_window(n - 1) : box(k, n - k);
      break;
    case WindowFamily::MukaiWPrime:
      if (k != 2) throw Error("the Wprime window is defined for k = 2 only");
      ws.members = sym_det_window(n);
      break;
    case WindowFamily::Tseu:
      ws.members = box(k, n - 1);
      break;
  }
  return ws;
}

bool membership(const Weight& w, const WindowSet& ws) {
  if (static_cast<int>(w.size()) != ws.k) throw Error("weight length does not match window rank");
  return ws.contains(w);
}

KoszulRestriction koszul_restriction_weights(int k, int n) {
  check_kn(k, n);
  // Lambda^m(S_2 (x) B) = sum S^lambda S_2 (x) S^lambda' B with dim B = n - k.
  std::set<Weight> direct, dual;
  for (int m = 0; m <= k * (n - k); ++m) {
    for (const auto& [lambda, conj] : cauchy_exterior(m, k, n - k)) {
      direct.insert(lambda);
      Weight d(lambda.rbegin(), lambda.rend());
      for (int& x : d) x = -x;
      dual.insert(d);
    }
  }
  const auto window = generate_window(WindowFamily::GflopW, k, n).members;
  KoszulRestriction out;
  const std::string direct_name = "Lambda(S2 (x) (V/S1)^dual) = Lambda(Hom(S2,V/S1)^dual)";
  const std::string dual_name = "Lambda(S2^dual (x) V/S1) = Lambda(Hom(S2,V/S1))";
  if (dual == window && direct != window) {
    out.weights = dual;
    out.convention = dual_name;
    out.rejected = direct;
    out.rejected_convention = direct_name;
  } else {
    out.weights = direct;
    out.convention = direct_name;
    out.rejected = dual;
    out.rejected_convention = dual_name;
  }
  out.matches_window = out.weights == window;
  return out;
}

TensorCheck oc_tensor_check(int n, const std::vector<Weight>& multipliers) {
  if (n <= 2) throw Error("oc_tensor_check requires n > 2");
  const Shape gl2 = Shape::gl(2);
  TensorCheck out;
  out.target = generate_window(WindowFamily::MukaiWPrime, 2, n).members;
  for (const auto& w : generate_window(WindowFamily::GflopW, 2, n).members) {
    const auto cw = Character::irreducible(gl2, w);
    for (const auto& m : multipliers) {
      const Character product = tensor(Character::irreducible(gl2, m), cw);
      for (const auto& [v, mult] : product.terms()) out.produced.insert(v);
    }
  }
  out.equal = out.produced == out.target;
  out.strict_subset = !out.equal && std::includes(out.target.begin(), out.target.end(),
                                                  out.produced.begin(), out.produced.end());
  return out;
}

TensorCheck oc_tensor_check(int n) { return oc_tensor_check(n, {{0, 0}, {1, 0}, {1, 1}}); }

std::vector<Weight> serialize(const WindowSet& ws) { return ws.sorted(); }

}  // namespace flopcalc
