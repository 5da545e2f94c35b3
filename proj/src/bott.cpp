#include "flopcalc/bott.hpp"

#include <algorithm>

namespace flopcalc {

void GrassmannBundleWeight::validate() const {
  if (!(0 < k && k < n)) throw Error("Grassmannian requires 0 < k < n");
  if (static_cast<int>(sub.size()) != k || static_cast<int>(quot.size()) != n - k)
    throw Error("bundle weight lengths do not match Gr(k, n)");
  if (!is_dominant(sub) || !is_dominant(quot)) throw Error("bundle weight is not dominant");
}

std::optional<Cohomology> bott_sort(const Weight& mu) {
  const int n = static_cast<int>(mu.size());
  Weight shifted(n);
  for (int i = 0; i < n; ++i) shifted[i] = mu[i] + (n - 1 - i);

  // Insertion sort into decreasing order; every swap is one inversion.
  int inversions = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = i; j > 0; --j) {
      if (shifted[j - 1] == shifted[j]) return std::nullopt;
      if (shifted[j - 1] > shifted[j]) break;
      std::swap(shifted[j - 1], shifted[j]);
      ++inversions;
    }
  }
  for (int i = 1; i < n; ++i)
    if (shifted[i - 1] == shifted[i]) return std::nullopt;

  for (int i = 0; i < n; ++i) shifted[i] -= (n - 1 - i);
  return Cohomology{inversions, std::move(shifted)};
}

std::optional<Cohomology> bott_push(const GrassmannBundleWeight& w) {
  w.validate();
  // S is the subbundle: the quotient data comes first.
  return bott_sort(concat(w.quot, w.sub));
}

std::map<int, Character> bott_push(const Character& levi_character) {
  const Shape& shape = levi_character.shape();
  if (shape.factors() != 2) throw Error("bott_push expects a GL(k) x GL(n-k) character");
  const int k = shape.ranks[0];
  const int n = shape.total();
  std::map<int, Character> out;
  for (const auto& [w, m] : levi_character.terms()) {
    auto coh = bott_push(GrassmannBundleWeight{k, n, block(w, shape, 0), block(w, shape, 1)});
    if (!coh) continue;
    auto [it, inserted] = out.try_emplace(coh->degree, Shape::gl(n));
    it->second.add(coh->weight, m);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

std::vector<RelativePush> relative_bott_push(const FlagBundleWeight& w) {
  const int kp = static_cast<int>(w.fibre_sub.size());
  const int k = kp + static_cast<int>(w.fibre_quot.size());
  auto coh = bott_push(GrassmannBundleWeight{kp, k, w.fibre_sub, w.fibre_quot});
  if (!coh) return {};
  return {RelativePush{coh->degree, coh->weight, w.spectator}};
}

}  // namespace flopcalc
