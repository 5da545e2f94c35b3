#pragma once

#include <map>
#include <string>
#include <vector>

#include "flopcalc/render.hpp"

namespace flopcalc {

/// column -> rendered summands (sorted)
using RenderedTable = std::map<int, std::vector<std::string>>;

RenderedTable rendered(const GradedTermList& c, Layout layout);
/// GL(H) terms without R-charge annotation.
RenderedTable rendered(const EquivariantResolution& r);

/// Reference tables, transcribed in the renderer's notation. Reference
/// tables carry no absolute column index; flattened ones are placed where the
/// builders put them (I0, OC and DELTA_BAR start at 0, I2 ends at 0, I1 starts
/// at -1).
RenderedTable claimed_weyman();
RenderedTable claimed_oc_homological();
RenderedTable claimed_oc_flattened();
RenderedTable claimed_complex(ComplexId id);

/// Column-by-column differences, empty when equal.
std::vector<std::string> table_diff(const RenderedTable& got, const RenderedTable& want);

}  // namespace flopcalc
