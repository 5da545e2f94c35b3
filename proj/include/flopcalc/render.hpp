#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "flopcalc/invariants.hpp"
#include "flopcalc/resolutions.hpp"
#include "flopcalc/windows.hpp"

namespace flopcalc {

// -- text, in the O(a,b) / Sym^2 / Hom notation --

/// S_1 is written through its dual (Sym^m S_1^dual), S_2 directly, e.g.
/// "S₁^∨⊗S₂(-1,1)", "Sym²S₂(-1,0)", "𝒪(-2,2)".
std::string render(const BundleKey& key);
/// A GL(H) Schur functor written through H^dual and det H, e.g. "Λ³H^∨",
/// "H^∨(det H)^-1", "(det H)^-2", "𝒪".
std::string render_h(const Weight& w);
std::string render_weight(const Weight& w);

/// Summands of one column in canonical order, repeated by multiplicity.
std::vector<std::string> render_column(const std::map<BundleKey, int>& column);
std::string join_sum(const std::vector<std::string>& parts);

/// One line per column: "<column>: A ⊕ B".
std::string render(const GradedTermList& c, Layout layout);
std::string render(const EquivariantResolution& r);

// -- structured output --

nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const BundleTerm& t);
nlohmann::json to_json(const GradedTermList& c, Layout layout);
nlohmann::json to_json(const EquivariantResolution& r);
nlohmann::json to_json(const WindowSet& ws);
nlohmann::json to_json(const Multidegree& d);

/// {claim, params, verdict, witnesses}
nlohmann::json make_report(const std::string& claim, nlohmann::json params, bool pass, nlohmann::json witnesses);

std::string to_string(Layout layout);
Layout parse_layout(const std::string& s);

}  // namespace flopcalc
