#pragma once

#include <string>

#include "tvb/analysis.hpp"

namespace tvb {

// Deterministic picture of a two-dimensional parliament: one colored region
// per polytope labeled by its ground-set vector, plus one marker glyph per
// maximal cone at each of its characters. Characters lying in no polytope
// are drawn hollow.
std::string render_svg(const BundleAnalysis& a, const std::string& title);

}  // namespace tvb
