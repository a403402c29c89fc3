#include "plots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace symprobe::cli {

namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 72, kRight = 150, kTop = 40, kBottom = 52;
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) { return fmt::format("{:.2f}", v); }

struct Axis {
  double lo, hi;
  bool log;
  double p0, p1;  // pixel range

  double t(double v) const { return log ? std::log10(v) : v; }
  double operator()(double v) const { return p0 + (t(v) - t(lo)) / (t(hi) - t(lo)) * (p1 - p0); }

  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      for (double e = std::floor(std::log10(lo)); e <= std::ceil(std::log10(hi)) + 1e-9; e += 1.0) {
        const double v = std::pow(10.0, e);
        if (v >= lo * (1 - 1e-9) && v <= hi * (1 + 1e-9)) out.push_back(v);
      }
      return out;
    }
    const double raw = (hi - lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
      if (m * mag >= raw) {
        step = m * mag;
        break;
      }
    }
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    return out;
  }
};

std::string tick_label(double v, bool log) {
  if (log) return fmt::format("1e{}", int(std::lround(std::log10(v))));
  return fmt::format("{:g}", v);
}

Axis fit_axis(double lo, double hi, bool log, double p0, double p1) {
  if (!(lo < hi)) {
    if (log) {
      lo /= 10;
      hi *= 10;
    } else {
      lo -= 1;
      hi += 1;
    }
  }
  if (log) {
    lo = std::pow(10.0, std::floor(std::log10(lo)));
    hi = std::pow(10.0, std::ceil(std::log10(hi)));
  }
  return {lo, hi, log, p0, p1};
}

class Canvas {
 public:
  explicit Canvas(const std::string& title) {
    out_ = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
        "font-family=\"sans-serif\" font-size=\"11\">\n"
        "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n"
        "<text x=\"{2}\" y=\"22\" font-size=\"14\" text-anchor=\"middle\">{3}</text>\n",
        kWidth, kHeight, num((kLeft + kWidth - kRight) / 2), escape(title));
  }

  void line(double x1, double y1, double x2, double y2, const std::string& style) {
    out_ += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {}/>\n", num(x1), num(y1), num(x2), num(y2), style);
  }
  void rect(double x, double y, double w, double h, const std::string& style) {
    out_ += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" {}/>\n", num(x), num(y), num(w), num(h), style);
  }
  void text(double x, double y, const std::string& s, const std::string& extra = "") {
    out_ += fmt::format("<text x=\"{}\" y=\"{}\" {}>{}</text>\n", num(x), num(y), extra, escape(s));
  }
  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
    std::string p;
    for (const auto& [x, y] : pts) p += num(x) + "," + num(y) + " ";
    if (!p.empty()) p.pop_back();
    out_ += fmt::format("<polyline points=\"{}\" fill=\"none\" {}/>\n", p, style);
  }
  void circle(double x, double y, double r, const std::string& fill) {
    out_ += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n", num(x), num(y), num(r), fill);
  }

  void axes(const Axis& x, const Axis& y, const std::string& xlabel, const std::string& ylabel, bool x_ticks = true) {
    const double bottom = kHeight - kBottom, right = kWidth - kRight;
    rect(kLeft, kTop, right - kLeft, bottom - kTop, "fill=\"none\" stroke=\"black\"");
    if (x_ticks) {
      for (double v : x.ticks()) {
        line(x(v), bottom, x(v), bottom + 4, "stroke=\"black\"");
        text(x(v), bottom + 16, tick_label(v, x.log), "text-anchor=\"middle\"");
      }
    }
    for (double v : y.ticks()) {
      line(kLeft - 4, y(v), kLeft, y(v), "stroke=\"black\"");
      text(kLeft - 6, y(v) + 4, tick_label(v, y.log), "text-anchor=\"end\"");
    }
    text((kLeft + right) / 2, kHeight - 14, xlabel, "text-anchor=\"middle\"");
    text(16, (kTop + bottom) / 2, ylabel,
         fmt::format("text-anchor=\"middle\" transform=\"rotate(-90 16 {})\"", num((kTop + bottom) / 2)));
  }

  void legend(const std::vector<std::string>& names) {
    for (size_t k = 0; k < names.size(); ++k) {
      const double y = kTop + 10 + 16 * double(k);
      rect(kWidth - kRight + 12, y - 8, 10, 10, fmt::format("fill=\"{}\"", kPalette[k % 8]));
      text(kWidth - kRight + 26, y + 1, names[k]);
    }
  }

  std::string finish() { return out_ + "</svg>\n"; }

 private:
  std::string out_;
};

}  // namespace

std::string distribution_plot(const std::string& title, const std::string& xlabel, const std::vector<Sample>& samples,
                              double floor) {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& s : samples) {
    for (double v : s.values) {
      lo = std::min(lo, std::max(v, floor));
      hi = std::max(hi, std::max(v, floor));
    }
  }
  if (!std::isfinite(lo)) lo = hi = floor;
  auto x = fit_axis(lo, hi, true, kLeft, kWidth - kRight);
  constexpr int bins = 40;
  const double l0 = std::log10(x.lo), l1 = std::log10(x.hi);
  std::vector<std::vector<double>> counts;
  double peak = 0.0;
  for (const auto& s : samples) {
    std::vector<double> c(bins, 0.0);
    for (double v : s.values) {
      const double lv = std::log10(std::max(v, floor));
      c[std::clamp(int((lv - l0) / (l1 - l0) * bins), 0, bins - 1)] += 1.0;
    }
    for (double& v : c) v /= std::max<double>(1.0, double(s.values.size()));
    peak = std::max(peak, *std::max_element(c.begin(), c.end()));
    counts.push_back(std::move(c));
  }
  if (peak <= 0.0) peak = 1.0;
  Axis y{0.0, peak * 1.1, false, kHeight - kBottom, kTop};
  Canvas canvas(title);
  canvas.axes(x, y, xlabel, "fraction of structures");
  for (size_t k = 0; k < counts.size(); ++k) {
    std::vector<std::pair<double, double>> pts;
    for (int b = 0; b < bins; ++b) {
      const double xa = std::pow(10.0, l0 + (l1 - l0) * b / bins), xb = std::pow(10.0, l0 + (l1 - l0) * (b + 1) / bins);
      pts.emplace_back(x(xa), y(counts[k][b]));
      pts.emplace_back(x(xb), y(counts[k][b]));
    }
    canvas.polyline(pts, fmt::format("stroke=\"{}\" stroke-width=\"1.5\"", kPalette[k % 8]));
  }
  std::vector<std::string> names;
  for (const auto& s : samples) names.push_back(s.name);
  canvas.legend(names);
  return canvas.finish();
}

std::string bar_plot(const std::string& title, const std::string& ylabel, const std::vector<std::string>& labels,
                     const std::vector<double>& values) {
  double hi = 0.0;
  for (double v : values) hi = std::max(hi, v);
  Axis y{0.0, hi > 0 ? hi * 1.1 : 1.0, false, kHeight - kBottom, kTop};
  Axis x{0.0, double(std::max<size_t>(1, labels.size())), false, kLeft, kWidth - kRight};
  Canvas canvas(title);
  canvas.axes(x, y, "irrep (lambda, sigma)", ylabel, false);
  const double w = (x.p1 - x.p0) / x.hi;
  for (size_t k = 0; k < labels.size(); ++k) {
    const double v = std::max(0.0, values[k]);
    canvas.rect(x(double(k)) + 0.15 * w, y(v), 0.7 * w, y(0.0) - y(v),
                fmt::format("fill=\"{}\"", kPalette[labels[k].find("-1") != std::string::npos ? 1 : 0]));
    canvas.text(x(double(k) + 0.5), kHeight - kBottom + 16, labels[k], "text-anchor=\"middle\" font-size=\"9\"");
  }
  canvas.legend({"sigma = +1", "sigma = -1"});
  return canvas.finish();
}

std::string heatmap_plot(const std::string& title, const std::vector<int>& epochs,
                         const std::vector<std::string>& rows, const std::vector<std::vector<double>>& values) {
  std::vector<int> trained;
  for (int e : epochs) {
    if (e > 0) trained.push_back(e);
  }
  const bool has_untrained = trained.size() != epochs.size();
  const double first = trained.empty() ? 1.0 : double(trained.front());
  const double last = trained.empty() ? 10.0 : double(trained.back());
  // Slot for the untrained column: one cell width left of the first epoch.
  const double span = std::max(std::log10(last) - std::log10(first), 1.0);
  const double cell = span / std::max<double>(4.0, double(trained.size()));
  double lo = std::log10(first) - cell * (has_untrained ? 1.5 : 0.5);
  double hi = std::log10(last) + cell * 0.5;
  Axis x{lo, hi, false, kLeft, kWidth - kRight};
  Axis y{0.0, double(std::max<size_t>(1, rows.size())), false, kTop, kHeight - kBottom};
  Canvas canvas(title);
  for (size_t c = 0; c < epochs.size(); ++c) {
    const double centre = epochs[c] > 0 ? std::log10(double(epochs[c])) : std::log10(first) - cell;
    for (size_t r = 0; r < rows.size(); ++r) {
      const double v = std::clamp(values[r][c], 0.0, 1.0);
      const int shade = int(std::lround(255 * (1.0 - v)));
      canvas.rect(x(centre - cell / 2), y(double(r)), x(centre + cell / 2) - x(centre - cell / 2), y(1.0) - y(0.0),
                  fmt::format("fill=\"rgb({},{},255)\" stroke=\"white\" stroke-width=\"0.5\"", shade, shade));
    }
    canvas.text(x(centre), kHeight - kBottom + 16, epochs[c] > 0 ? std::to_string(epochs[c]) : "U",
                "text-anchor=\"middle\" font-size=\"9\"");
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    canvas.text(kLeft - 6, y(double(r) + 0.5) + 4, rows[r], "text-anchor=\"end\" font-size=\"9\"");
  }
  canvas.text((kLeft + kWidth - kRight) / 2, kHeight - 14, "epoch (log scale)", "text-anchor=\"middle\"");
  for (int k = 0; k <= 4; ++k) {
    const double v = 1.0 - k / 4.0;
    const int shade = int(std::lround(255 * (1.0 - v)));
    canvas.rect(kWidth - kRight + 12, kTop + 18.0 * k, 14, 18, fmt::format("fill=\"rgb({},{},255)\"", shade, shade));
    canvas.text(kWidth - kRight + 32, kTop + 18.0 * k + 13, fmt::format("{:.2f}", v));
  }
  canvas.text(kWidth - kRight + 12, kTop + 110, "normalized B");
  return canvas.finish();
}

std::string line_plot(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                      const std::vector<Curve>& curves, bool log_x, bool log_y) {
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo, ylo = xlo, yhi = -xlo;
  for (const auto& c : curves) {
    for (size_t k = 0; k < c.x.size(); ++k) {
      if ((log_x && c.x[k] <= 0) || (log_y && c.y[k] <= 0) || !std::isfinite(c.x[k]) || !std::isfinite(c.y[k])) continue;
      xlo = std::min(xlo, c.x[k]);
      xhi = std::max(xhi, c.x[k]);
      ylo = std::min(ylo, c.y[k]);
      yhi = std::max(yhi, c.y[k]);
    }
  }
  if (!std::isfinite(xlo)) xlo = xhi = ylo = yhi = 1.0;
  if (!log_y && ylo > 0) ylo = 0.0;
  auto x = fit_axis(xlo, xhi, log_x, kLeft, kWidth - kRight);
  auto y = fit_axis(ylo, yhi, log_y, kHeight - kBottom, kTop);
  Canvas canvas(title);
  canvas.axes(x, y, xlabel, ylabel);
  std::vector<std::string> names;
  for (size_t k = 0; k < curves.size(); ++k) {
    const auto& c = curves[k];
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < c.x.size(); ++i) {
      if ((log_x && c.x[i] <= 0) || (log_y && c.y[i] <= 0) || !std::isfinite(c.x[i]) || !std::isfinite(c.y[i])) continue;
      pts.emplace_back(x(c.x[i]), y(c.y[i]));
    }
    canvas.polyline(pts, fmt::format("stroke=\"{}\" stroke-width=\"1.5\"", kPalette[k % 8]));
    if (pts.size() <= 12) {
      for (const auto& [px, py] : pts) canvas.circle(px, py, 2.5, kPalette[k % 8]);
    }
    names.push_back(c.name);
  }
  canvas.legend(names);
  return canvas.finish();
}

}  // namespace symprobe::cli
