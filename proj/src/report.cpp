#include "ekzero/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ekzero {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos && s.find_first_of("0123456789") != std::string::npos) {
    s += ".0";
  }
  return s;
}

namespace {

void append_disk(std::ostringstream& os, const Disk& d) {
  os << "{\"cx\":" << format_double(d.center.real()) << ",\"cy\":" << format_double(d.center.imag())
     << ",\"r\":" << format_double(d.radius)
     << ",\"closed\":" << (d.openness == Openness::closed_inclusion ? "true" : "false") << "}";
}

void append_disk_list(std::ostringstream& os, const std::vector<Disk>& disks) {
  os << "[";
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (i) os << ",";
    append_disk(os, disks[i]);
  }
  os << "]";
}

}  // namespace

std::string region_report_json(const RegionReport& r) {
  std::ostringstream os;
  os << "{\"theorem\":\"" << r.theorem << "\",\"parameters\":{";
  bool first = true;
  for (const auto& [key, value] : r.parameters) {
    if (!first) os << ",";
    first = false;
    os << "\"" << key << "\":" << format_double(value);
  }
  os << "},\"inclusion\":";
  append_disk_list(os, r.inclusion);
  os << ",\"exclusion\":";
  append_disk_list(os, r.exclusion);
  os << ",\"disjoint\":[";
  for (std::size_t i = 0; i < r.disjoint.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < r.disjoint[i].size(); ++j) {
      if (j) os << ",";
      os << (r.disjoint[i][j] ? "true" : "false");
    }
    os << "]";
  }
  os << "]";
  if (r.counts) {
    os << ",\"counts\":[";
    for (std::size_t i = 0; i < r.counts->size(); ++i) {
      if (i) os << ",";
      const CountGroup& g = (*r.counts)[i];
      os << "{\"disks\":[";
      for (std::size_t j = 0; j < g.disks.size(); ++j) {
        if (j) os << ",";
        os << g.disks[j];
      }
      os << "],\"count\":" << g.count << "}";
    }
    os << "]";
  }
  os << ",\"others_redundant\":" << (r.others_redundant ? "true" : "false") << "}";
  return os.str();
}

RegionReport parse_region_report(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  RegionReport r;
  r.theorem = j.at("theorem").get<std::string>();
  for (const auto& [key, value] : j.at("parameters").items()) {
    r.parameters[key] = value.get<double>();
  }
  auto read_disks = [](const nlohmann::json& arr) {
    std::vector<Disk> out;
    for (const auto& d : arr) {
      out.push_back(Disk{Complex(d.at("cx").get<double>(), d.at("cy").get<double>()),
                         d.at("r").get<double>(),
                         d.at("closed").get<bool>() ? Openness::closed_inclusion
                                                    : Openness::open_exclusion});
    }
    return out;
  };
  r.inclusion = read_disks(j.at("inclusion"));
  r.exclusion = read_disks(j.at("exclusion"));
  for (const auto& row : j.at("disjoint")) {
    std::vector<bool> v;
    for (const auto& b : row) v.push_back(b.get<bool>());
    r.disjoint.push_back(std::move(v));
  }
  if (j.contains("counts")) {
    std::vector<CountGroup> counts;
    for (const auto& g : j.at("counts")) {
      CountGroup cg;
      for (const auto& idx : g.at("disks")) cg.disks.push_back(idx.get<int>());
      cg.count = g.at("count").get<int>();
      counts.push_back(std::move(cg));
    }
    r.counts = std::move(counts);
  }
  r.others_redundant = j.at("others_redundant").get<bool>();
  return r;
}

std::string bound_interval_json(const BoundInterval& b) {
  return "{\"lower\":" + format_double(b.lower) + ",\"upper\":" + format_double(b.upper) + "}";
}

std::string root_set_json(const RootSet& rs) {
  const auto [lo, hi] = moduli_extremes(rs);
  std::ostringstream os;
  os << "{\"degree\":" << rs.roots.size() << ",\"max_residual\":" << format_double(rs.max_residual)
     << ",\"min_modulus\":" << format_double(lo) << ",\"max_modulus\":" << format_double(hi)
     << ",\"roots\":[";
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
    if (i) os << ",";
    os << "{\"re\":" << format_double(rs.roots(i).real())
       << ",\"im\":" << format_double(rs.roots(i).imag()) << "}";
  }
  os << "]}";
  return os.str();
}

// --- figure compositions -----------------------------------------------------

namespace {

void add_report_disks(PlotSpec& ps, const RegionReport& r, Stroke inclusion_stroke) {
  for (const Disk& d : r.inclusion) ps.circles.emplace_back(d, inclusion_stroke);
  for (const Disk& d : r.exclusion) ps.circles.emplace_back(d, Stroke::dash_dot);
}

void add_markers(PlotSpec& ps, const RootSet& rs) {
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i) ps.markers.push_back(rs.roots(i));
}

Disk origin_circle(double radius) {
  return Disk{Complex(0.0), radius, Openness::closed_inclusion};
}

// Shift a scene sideways so two panels can share one canvas.
void shift(PlotSpec& ps, std::size_t from_circle, std::size_t from_marker, double dx) {
  for (std::size_t i = from_circle; i < ps.circles.size(); ++i) {
    ps.circles[i].first.center += Complex(dx, 0.0);
  }
  for (std::size_t i = from_marker; i < ps.markers.size(); ++i) ps.markers[i] += Complex(dx, 0.0);
}

}  // namespace

PlotSpec plot_single_disk_comparison(const Polynomial& p) {
  PlotSpec ps;
  const BoundInterval cubic = thm33_bounds(p, 2);
  ps.circles.emplace_back(origin_circle(cubic.upper), Stroke::solid);
  ps.circles.emplace_back(origin_circle(cubic.lower), Stroke::solid);
  add_report_disks(ps, thm43_disks(p), Stroke::solid);
  ps.circles.emplace_back(origin_circle(cauchy_radius(p, 1).value), Stroke::dashed);
  add_markers(ps, all_roots(p));
  return ps;
}

PlotSpec plot_two_disk_comparison(const Polynomial& p) {
  PlotSpec ps;
  ps.circles.emplace_back(origin_circle(thm33_bounds(p, 2).upper), Stroke::dotted);
  ps.circles.emplace_back(thm41_disks(p).inclusion[0], Stroke::dashed);
  for (const Disk& d : thm51_region(p).inclusion) ps.circles.emplace_back(d, Stroke::solid);
  add_markers(ps, all_roots(p));
  return ps;
}

PlotSpec plot_union_comparison(const Polynomial& p) {
  PlotSpec ps;
  const double reference = thm33_bounds(p, 2).upper;
  const RootSet rs = all_roots(p);

  ps.circles.emplace_back(origin_circle(reference), Stroke::dotted);
  const RegionReport two = thm51_region(p);
  for (const Disk& d : two.inclusion) ps.circles.emplace_back(d, Stroke::solid);
  add_markers(ps, rs);

  // Right panel, offset past the left panel's extent.
  double left_min = 0.0, left_max = 0.0;
  for (const auto& [d, s] : ps.circles) {
    left_min = std::min(left_min, d.center.real() - d.radius);
    left_max = std::max(left_max, d.center.real() + d.radius);
  }
  const double width = left_max - left_min;
  const std::size_t circle_mark = ps.circles.size();
  const std::size_t marker_mark = ps.markers.size();

  ps.circles.emplace_back(origin_circle(reference), Stroke::dotted);
  const RegionReport three = cor61_region(p);
  for (const Disk& d : three.inclusion) ps.circles.emplace_back(d, Stroke::solid);
  add_markers(ps, rs);
  shift(ps, circle_mark, marker_mark, 1.15 * width);
  return ps;
}

}  // namespace ekzero
