#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>

#include "ekzero/report.hpp"

namespace ekzero {

namespace {

const char* dash_array(Stroke s) {
  switch (s) {
    case Stroke::solid: return "";
    case Stroke::dashed: return " stroke-dasharray=\"8,5\"";
    case Stroke::dotted: return " stroke-dasharray=\"1.5,3.5\"";
    case Stroke::dash_dot: return " stroke-dasharray=\"9,4,1.5,4\"";
  }
  return "";
}

struct Box {
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
};

Box content_box(const PlotSpec& ps) {
  Box b{1e300, -1e300, 1e300, -1e300};
  auto grow = [&](double x, double y, double r) {
    b.min_x = std::min(b.min_x, x - r);
    b.max_x = std::max(b.max_x, x + r);
    b.min_y = std::min(b.min_y, y - r);
    b.max_y = std::max(b.max_y, y + r);
  };
  for (const auto& [d, s] : ps.circles) grow(d.center.real(), d.center.imag(), d.radius);
  for (const Complex& m : ps.markers) grow(m.real(), m.imag(), 0.0);
  return b;
}

void appendf(std::string& out, const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, ap);
  va_end(ap);
  out += buf;
}

}  // namespace

std::string render_svg(const PlotSpec& ps) {
  if (ps.circles.empty() && ps.markers.empty()) {
    throw validation_error(errc::hypothesis_violated, "render_svg: empty plot");
  }
  Box box = content_box(ps);
  const double span = std::max({box.max_x - box.min_x, box.max_y - box.min_y, 1e-9});
  const double margin = 0.10 * span;
  box.min_x -= margin;
  box.max_x += margin;
  box.min_y -= margin;
  box.max_y += margin;

  const double width = static_cast<double>(ps.size_px);
  const double scale = width / (box.max_x - box.min_x);
  const double height = std::ceil((box.max_y - box.min_y) * scale);

  auto px = [&](double x) { return (x - box.min_x) * scale; };
  auto py = [&](double y) { return (box.max_y - y) * scale; };

  std::string out;
  appendf(out,
          "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
          "viewBox=\"0 0 %.0f %.0f\">\n",
          width, height, width, height);

  for (const auto& [disk, stroke] : ps.circles) {
    appendf(out,
            "  <circle class=\"disk\" cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" "
            "stroke=\"black\" stroke-width=\"1.5\"%s/>\n",
            px(disk.center.real()), py(disk.center.imag()), disk.radius * scale,
            dash_array(stroke));
  }

  // Zeros as circled asterisks: a small circle around a six-armed star.
  const double mr = 5.0, arm = 3.6;
  for (const Complex& m : ps.markers) {
    const double cx = px(m.real()), cy = py(m.imag());
    appendf(out, "  <g class=\"zero\">\n");
    appendf(out,
            "    <circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" stroke=\"black\" "
            "stroke-width=\"1\"/>\n",
            cx, cy, mr);
    for (int k = 0; k < 3; ++k) {
      const double ang = k * 1.0471975511965976;  // 60 degrees
      const double dx = arm * std::cos(ang), dy = arm * std::sin(ang);
      appendf(out,
              "    <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\" "
              "stroke-width=\"1\"/>\n",
              cx - dx, cy - dy, cx + dx, cy + dy);
    }
    appendf(out, "  </g>\n");
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ekzero
