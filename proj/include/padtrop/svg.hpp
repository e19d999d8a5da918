#pragma once

#include <string>

namespace padtrop {

// Minimal standalone SVG writer. Coordinates are printed with fixed
// precision so output is byte-stable.
class SvgDocument {
 public:
  SvgDocument(double width, double height);

  void line(double x1, double y1, double x2, double y2, const std::string& stroke = "black", double width = 1.5,
            const std::string& extra = "");
  void circle(double cx, double cy, double r, const std::string& fill = "black");
  void rect(double x, double y, double w, double h, const std::string& fill, const std::string& stroke = "none");
  void polygon(const std::string& points, const std::string& fill, const std::string& stroke = "black");
  void text(double x, double y, const std::string& s, double size = 12, const std::string& anchor = "middle");

  std::string str() const;

 private:
  double width_;
  double height_;
  std::string body_;
};

// Maps a data box onto the canvas with a 10% margin; y grows upwards in data
// space and downwards on the canvas.
class Viewport {
 public:
  Viewport(double xmin, double xmax, double ymin, double ymax, double width, double height);
  double x(double v) const;
  double y(double v) const;

 private:
  double xmin_, ymin_, sx_, sy_, ox_, oy_, height_;
};

std::string escape_xml(const std::string& s);

}  // namespace padtrop
