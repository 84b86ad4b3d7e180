#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace curvewalk::tool {

// Just enough SVG for the report plots: scattered points, polylines and
// vertical bars in a fixed 640x420 frame with linear axes.
class SvgPlot {
 public:
  SvgPlot(double xmin, double xmax, double ymin, double ymax, std::string title)
      : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax), title_(std::move(title)) {
    if (xmax_ <= xmin_) xmax_ = xmin_ + 1;
    if (ymax_ <= ymin_) ymax_ = ymin_ + 1;
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const char* color) {
    std::string d;
    for (const auto& [x, y] : pts) {
      d += d.empty() ? "M" : "L";
      d += coord(x, y);
    }
    body_ += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\"/>\n";
  }

  void points(const std::vector<std::pair<double, double>>& pts, const char* color) {
    for (const auto& [x, y] : pts) {
      body_ += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) +
               "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
  }

  void bar(double x, double height, double width, const char* color) {
    double x0 = px(x - width / 2), x1 = px(x + width / 2);
    double y0 = py(std::max(0.0, ymin_)), y1 = py(height);
    body_ += "<rect x=\"" + num(x0) + "\" y=\"" + num(std::min(y0, y1)) + "\" width=\"" +
             num(x1 - x0) + "\" height=\"" + num(std::abs(y0 - y1)) + "\" fill=\"" + color +
             "\"/>\n";
  }

  void hline(double y, const char* color) {
    polyline({{xmin_, y}, {xmax_, y}}, color);
  }

  std::string str() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\">\n";
    out += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
    out += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">" + title_ + "</text>\n";
    out += "<rect x=\"60\" y=\"40\" width=\"540\" height=\"330\" fill=\"none\" "
           "stroke=\"#999\"/>\n";
    out += axis_labels();
    out += body_;
    out += "</svg>\n";
    return out;
  }

 private:
  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
  }
  double px(double x) const { return 60 + 540 * (x - xmin_) / (xmax_ - xmin_); }
  double py(double y) const { return 370 - 330 * (y - ymin_) / (ymax_ - ymin_); }
  std::string coord(double x, double y) const { return num(px(x)) + " " + num(py(y)) + " "; }

  std::string axis_labels() const {
    std::string out;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", xmin_);
    out += "<text x=\"60\" y=\"390\" font-family=\"sans-serif\" font-size=\"11\">" +
           std::string(buf) + "</text>\n";
    std::snprintf(buf, sizeof buf, "%.3g", xmax_);
    out += "<text x=\"580\" y=\"390\" font-family=\"sans-serif\" font-size=\"11\">" +
           std::string(buf) + "</text>\n";
    std::snprintf(buf, sizeof buf, "%.3g", ymin_);
    out += "<text x=\"10\" y=\"372\" font-family=\"sans-serif\" font-size=\"11\">" +
           std::string(buf) + "</text>\n";
    std::snprintf(buf, sizeof buf, "%.3g", ymax_);
    out += "<text x=\"10\" y=\"48\" font-family=\"sans-serif\" font-size=\"11\">" +
           std::string(buf) + "</text>\n";
    return out;
  }

  double xmin_, xmax_, ymin_, ymax_;
  std::string title_;
  std::string body_;
};

}  // namespace curvewalk::tool
