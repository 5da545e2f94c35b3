#include "flopcalc/claims.hpp"

#include <algorithm>

namespace flopcalc {

namespace {

RenderedTable sorted(RenderedTable t) {
  for (auto& [col, parts] : t) std::sort(parts.begin(), parts.end());
  return t;
}

const std::string kO = "𝒪";
const std::string kOm11 = "𝒪(-1,1)";
const std::string kOm22 = "𝒪(-2,2)";
const std::string kHom = "S₁^∨⊗S₂";
const std::string kHomTw = "S₁^∨⊗S₂(-1,1)";
const std::string kSym2 = "Sym²S₂(-1,0)";
const std::string kSym1 = "Sym²S₁^∨(0,1)";

}  // namespace

RenderedTable rendered(const GradedTermList& c, Layout layout) {
  RenderedTable out;
  for (const auto& [col, terms] : c.columns(layout)) out[col] = render_column(terms);
  return sorted(out);
}

RenderedTable rendered(const EquivariantResolution& r) {
  RenderedTable out;
  for (const auto& t : r.terms) out[t.hdeg].push_back(render_h(t.weight));
  return sorted(out);
}

RenderedTable claimed_weyman() {
  return sorted({{-3, {"(det H)^-2"}},
                 {-2, {"H^∨(det H)^-1", "(det H)^-1"}},
                 {-1, {"(det H)^-1", "Λ³H^∨"}},
                 {0, {kO}}});
}

RenderedTable claimed_oc_homological() {
  return sorted({{-3, {kOm11}}, {-2, {kHom, kOm11}}, {-1, {kO, kHom}}, {0, {kO}}});
}

RenderedTable claimed_oc_flattened() {
  return sorted({{0, {kO, kOm11}}, {1, {kHom}}, {2, {kHom}}, {3, {kO, kOm11}}});
}

RenderedTable claimed_complex(ComplexId id) {
  switch (id) {
    case ComplexId::I2:
      return sorted({{-4, {kOm22}}, {-3, {kHomTw}}, {-2, {kSym2, kSym1}}, {-1, {kHom}}, {0, {kO}}});
    case ComplexId::I0:
      return sorted({{0, {kO}}, {1, {kHom}}, {2, {kSym2, kSym1}}, {3, {kHomTw}}, {4, {kOm22}}});
    case ComplexId::I1: {
      const std::vector<std::string> outer = {kO, kSym2, kSym1, kOm11, kOm22};
      return sorted({{-1, {kOm11}}, {0, outer}, {1, {kHom, kHom, kHomTw, kHomTw}}, {2, outer}, {3, {kOm11}}});
    }
    case ComplexId::DeltaBar:
      return sorted({{0, {kO, kOm11}},
                     {1, {kHom, kO, kOm11}},
                     {2, {kHom, kHom}},
                     {3, {kO, kOm11, kHom}},
                     {4, {kO, kOm11}}});
    case ComplexId::OC:
      return claimed_oc_flattened();
  }
  return {};
}

std::vector<std::string> table_diff(const RenderedTable& got, const RenderedTable& want) {
  std::vector<std::string> out;
  std::vector<int> cols;
  for (const auto& [c, v] : got) cols.push_back(c);
  for (const auto& [c, v] : want) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  for (int c : cols) {
    const auto g = got.count(c) ? got.at(c) : std::vector<std::string>{};
    const auto w = want.count(c) ? want.at(c) : std::vector<std::string>{};
    if (g != w) out.push_back("column " + std::to_string(c) + ": got " + join_sum(g) + ", expected " + join_sum(w));
  }
  return out;
}

}  // namespace flopcalc
