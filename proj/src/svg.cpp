#include "padtrop/svg.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace padtrop {

SvgDocument::SvgDocument(double width, double height) : width_(width), height_(height) {}

void SvgDocument::line(double x1, double y1, double x2, double y2, const std::string& stroke, double width,
                       const std::string& extra) {
  body_ += fmt::format(R"(<line x1="{:.3f}" y1="{:.3f}" x2="{:.3f}" y2="{:.3f}" stroke="{}" stroke-width="{:.2f}"{}/>)",
                       x1, y1, x2, y2, stroke, width, extra.empty() ? "" : " " + extra);
  body_ += '\n';
}

void SvgDocument::circle(double cx, double cy, double r, const std::string& fill) {
  body_ += fmt::format(R"(<circle cx="{:.3f}" cy="{:.3f}" r="{:.3f}" fill="{}"/>)", cx, cy, r, fill);
  body_ += '\n';
}

void SvgDocument::rect(double x, double y, double w, double h, const std::string& fill, const std::string& stroke) {
  body_ += fmt::format(R"(<rect x="{:.3f}" y="{:.3f}" width="{:.3f}" height="{:.3f}" fill="{}" stroke="{}"/>)", x,
                       y, w, h, fill, stroke);
  body_ += '\n';
}

void SvgDocument::polygon(const std::string& points, const std::string& fill, const std::string& stroke) {
  body_ += fmt::format(R"(<polygon points="{}" fill="{}" stroke="{}"/>)", points, fill, stroke);
  body_ += '\n';
}

void SvgDocument::text(double x, double y, const std::string& s, double size, const std::string& anchor) {
  body_ += fmt::format(R"(<text x="{:.3f}" y="{:.3f}" font-family="sans-serif" font-size="{:.1f}" text-anchor="{}">{}</text>)",
                       x, y, size, anchor, escape_xml(s));
  body_ += '\n';
}

std::string SvgDocument::str() const {
  std::string out = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "viewBox=\"0 0 {:.0f} {:.0f}\">\n",
      width_, height_, width_, height_);
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", width_, height_);
  out += body_;
  out += "</svg>\n";
  return out;
}

Viewport::Viewport(double xmin, double xmax, double ymin, double ymax, double width, double height)
    : xmin_(xmin), ymin_(ymin), height_(height) {
  const double dx = std::max(xmax - xmin, 1e-9);
  const double dy = std::max(ymax - ymin, 1e-9);
  const double mx = 0.1 * width;
  const double my = 0.1 * height;
  sx_ = (width - 2 * mx) / dx;
  sy_ = (height - 2 * my) / dy;
  ox_ = mx;
  oy_ = my;
}

double Viewport::x(double v) const { return ox_ + (v - xmin_) * sx_; }
double Viewport::y(double v) const { return height_ - (oy_ + (v - ymin_) * sy_); }

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace padtrop
