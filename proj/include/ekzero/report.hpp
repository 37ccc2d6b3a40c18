#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ekzero/region.hpp"
#include "ekzero/roots.hpp"
#include "ekzero/theorems.hpp"

namespace ekzero {

// 12 significant digits; integral values keep a trailing ".0".
std::string format_double(double x);

std::string region_report_json(const RegionReport& r);
RegionReport parse_region_report(const std::string& json_text);

std::string bound_interval_json(const BoundInterval& b);
std::string root_set_json(const RootSet& rs);

enum class Stroke { solid, dashed, dotted, dash_dot };

// Circles plus zero markers (drawn as circled asterisks); the viewport is
// derived from the content with a 10% margin and equal-aspect axes.
struct PlotSpec {
  std::vector<std::pair<Disk, Stroke>> circles;
  std::vector<Complex> markers;
  int size_px = 640;  // output width in pixels; height follows the aspect
};

// Standalone SVG, byte-deterministic for a given PlotSpec.
std::string render_svg(const PlotSpec& ps);

// Stroke conventions: inclusion solid, exclusion dash-dot, Cauchy-radius
// reference dashed, single-disk comparisons dotted.

// Quartic-multiplier disks overlaid on the cubic-multiplier bound circles,
// with the Cauchy radius for reference.
PlotSpec plot_single_disk_comparison(const Polynomial& p);
// Two-disk union against the single inclusion disk and the origin bound.
PlotSpec plot_two_disk_comparison(const Polynomial& p);
// Side-by-side panels: two-disk union (left) vs three-disk union (right).
PlotSpec plot_union_comparison(const Polynomial& p);

}  // namespace ekzero
