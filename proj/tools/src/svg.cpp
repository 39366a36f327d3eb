#include "arlab_cli/svg.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace arlab::cli {

void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows, const std::string& title) {
  constexpr double width = 480;
  constexpr double height = 320;
  constexpr double left = 56;
  constexpr double right = 24;
  constexpr double top = 40;
  constexpr double bottom = 48;
  std::size_t t_max = 1;
  std::size_t m_max = 1;
  std::map<Mode, std::vector<const SweepRow*>> series;
  for (const auto& r : rows) {
    t_max = std::max(t_max, r.T);
    m_max = std::max(m_max, r.m_hat);
    series[r.mode].push_back(&r);
  }
  auto x_of = [&](double T) { return left + (width - left - right) * (T - 1) / std::max(1.0, double(t_max) - 1); };
  auto y_of = [&](double m) { return height - bottom - (height - top - bottom) * m / double(m_max); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right << "\" y2=\""
      << height - bottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << height - bottom
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\" font-size=\"12\">T</text>\n";
  out << "<text x=\"16\" y=\"" << height / 2 << "\" font-size=\"12\" transform=\"rotate(-90 16 " << height / 2
      << ")\" text-anchor=\"middle\">estimated sample size</text>\n";
  out << "<text x=\"" << left - 6 << "\" y=\"" << y_of(double(m_max)) + 4 << "\" text-anchor=\"end\" font-size=\"10\">"
      << m_max << "</text>\n";
  out << "<text x=\"" << left - 6 << "\" y=\"" << y_of(0) + 4 << "\" text-anchor=\"end\" font-size=\"10\">0</text>\n";

  const char* colors[] = {"#1f77b4", "#d62728"};
  std::size_t k = 0;
  for (auto& [mode, pts] : series) {
    std::sort(pts.begin(), pts.end(), [](const SweepRow* a, const SweepRow* b) { return a->T < b->T; });
    const char* color = colors[k % 2];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto* p : pts) out << x_of(double(p->T)) << ',' << y_of(double(p->m_hat)) << ' ';
    out << "\"/>\n";
    for (const auto* p : pts) {
      out << "<circle cx=\"" << x_of(double(p->T)) << "\" cy=\"" << y_of(double(p->m_hat)) << "\" r=\"3\" fill=\""
          << color << "\"/>\n";
      out << "<text x=\"" << x_of(double(p->T)) << "\" y=\"" << height - bottom + 14
          << "\" text-anchor=\"middle\" font-size=\"10\">" << p->T << "</text>\n";
    }
    out << "<text x=\"" << width - right - 4 << "\" y=\"" << top + 14 * double(k) << "\" text-anchor=\"end\" fill=\""
        << color << "\" font-size=\"12\">" << to_string(mode) << "</text>\n";
    ++k;
  }
  out << "</svg>\n";
}

}  // namespace arlab::cli
