#include "smtl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

namespace smtl::report {

namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string escape(const std::string& s) {
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

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double span, int target) {
  if (span <= 0) return 1.0;
  double raw = span / target;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double norm = raw / mag;
  double mult = norm <= 1 ? 1 : norm <= 2 ? 2 : norm <= 5 ? 5 : 10;
  return mult * mag;
}

std::string tick_label(double v, double step) {
  int digits = step >= 1 ? 0 : static_cast<int>(std::ceil(-std::log10(step)));
  return fixed(v, digits);
}

} // namespace

void write_metrics_csv(std::ostream& out, const grid::ExperimentResult& result) {
  out << kMetricsHeader << '\n';
  for (const auto& r : result.runs) {
    if (!r.result) continue;
    const auto& m = r.result->metrics;
    out << r.size << ',' << grid::to_string(r.policy) << ',' << r.seed << ','
        << fixed(to_double(m.collision_rate)) << ',' << fixed(to_double(m.avg_path_length)) << ','
        << fixed(to_double(m.path_efficiency)) << ',' << fixed(to_double(m.avg_waits)) << ','
        << fixed(m.mean_compute_ms) << ',' << m.unfinished << '\n';
  }
}

void write_summary_csv(std::ostream& out, const grid::ExperimentResult& result) {
  out << "size,policy,runs,failures";
  for (const char* name : {"collision_rate", "avg_path_length", "path_efficiency", "avg_waits",
                           "mean_compute_ms", "unfinished"})
    out << ',' << name << "_mean," << name << "_std";
  out << '\n';
  for (const auto& row : result.table) {
    out << row.size << ',' << grid::to_string(row.policy) << ',' << row.runs << ',' << row.failures;
    for (const auto* s : {&row.collision_rate, &row.avg_path_length, &row.path_efficiency,
                          &row.avg_waits, &row.compute_ms, &row.unfinished})
      out << ',' << fixed(s->mean) << ',' << fixed(s->stddev);
    out << '\n';
  }
}

std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series) {
  constexpr double width = 640, height = 420;
  constexpr double left = 80, right = 150, top = 50, bottom = 60;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double x_min = INFINITY, x_max = -INFINITY, y_min = 0, y_max = -INFINITY;
  for (const auto& s : series)
    for (auto [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  if (!std::isfinite(x_min)) x_min = 0, x_max = 1, y_max = 1;
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max <= y_min) y_max = y_min + 1;
  const double y_step = nice_step(y_max - y_min, 5);
  y_max = std::ceil(y_max / y_step) * y_step;
  y_min = std::floor(y_min / y_step) * y_step;

  auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return top + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
      << escape(title) << "</text>\n";

  // y grid and ticks
  for (double y = y_min; y <= y_max + y_step / 2; y += y_step) {
    svg << "<line x1=\"" << left << "\" y1=\"" << fixed(py(y), 2) << "\" x2=\"" << left + plot_w
        << "\" y2=\"" << fixed(py(y), 2) << "\" stroke=\"#e0e0e0\"/>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << fixed(py(y) + 4, 2) << "\" text-anchor=\"end\">"
        << tick_label(y, y_step) << "</text>\n";
  }
  // x ticks at the data points
  std::vector<double> xs;
  for (const auto& s : series)
    for (auto [x, y] : s.points) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (double x : xs)
    svg << "<line x1=\"" << fixed(px(x), 2) << "\" y1=\"" << top + plot_h << "\" x2=\"" << fixed(px(x), 2)
        << "\" y2=\"" << top + plot_h + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fixed(px(x), 2) << "\" y=\"" << top + plot_h + 20
        << "\" text-anchor=\"middle\">" << tick_label(x, 1) << "</text>\n";

  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
      << top + plot_h << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">"
      << escape(x_label) << "</text>\n"
      << "<text x=\"20\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << top + plot_h / 2 << ")\">" << escape(y_label) << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    auto pts = s.points;
    std::sort(pts.begin(), pts.end());
    svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      svg << (i ? " " : "") << fixed(px(pts[i].first), 2) << ',' << fixed(py(pts[i].second), 2);
    svg << "\"/>\n";
    for (auto [x, y] : pts)
      svg << "<circle cx=\"" << fixed(px(x), 2) << "\" cy=\"" << fixed(py(y), 2) << "\" r=\"4\" fill=\""
          << s.color << "\"/>\n";
    const double ly = top + 10 + 22 * static_cast<double>(k);
    svg << "<line x1=\"" << left + plot_w + 20 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 45
        << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << left + plot_w + 52 << "\" y=\"" << ly + 4 << "\">" << escape(s.name) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<Chart> experiment_charts(const grid::ExperimentResult& result) {
  struct Panel {
    const char* file;
    const char* title;
    const char* y_label;
    std::function<double(const grid::AggregateRow&)> value;
  };
  const std::vector<Panel> panels{
      {"collision_rate.svg", "Collision rate", "collisions per agent",
       [](const auto& r) { return r.collision_rate.mean; }},
      {"avg_path_length.svg", "Average path length", "timesteps",
       [](const auto& r) { return r.avg_path_length.mean; }},
      {"path_efficiency.svg", "Path efficiency", "shortest / actual",
       [](const auto& r) { return r.path_efficiency.mean; }},
      {"avg_waits.svg", "Average waits due to others", "waits per agent",
       [](const auto& r) { return r.avg_waits.mean; }},
      {"compute_time.svg", "Computation time per step per agent", "milliseconds",
       [](const auto& r) { return r.compute_ms.mean; }},
  };
  std::vector<Chart> charts;
  for (const auto& p : panels) {
    std::vector<Series> series{{"MTL", "#d62728", {}}, {"SMTL", "#1f77b4", {}}};
    for (const auto& row : result.table) {
      if (row.runs == 0) continue;
      series[row.policy == grid::Policy::MTL ? 0 : 1].points.emplace_back(row.size, p.value(row));
    }
    std::erase_if(series, [](const Series& s) { return s.points.empty(); });
    charts.push_back({p.file, line_chart(p.title, "grid size N (N x N, N agents)", p.y_label, series)});
  }
  return charts;
}

} // namespace smtl::report
