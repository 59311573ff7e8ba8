#include "catsim/svg.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace catsim {

namespace {

constexpr double kRoot3Half = 0.8660254037844386;

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::array<double, 2> barycentric_to_xy(const FrequencyTriple& q) {
  // q1*(0,0) + q2*(1,0) + q0*(0.5, sqrt(3)/2)
  return {q.q2 + 0.5 * q.q0, kRoot3Half * q.q0};
}

void write_figure_svg(std::ostream& os, const TriangleGrid* grid,
                      const std::vector<std::uint8_t>* cells,
                      const std::vector<FrequencyTriple>& points,
                      const FigureOptions& opt) {
  const double margin = 42.0;
  const double scale = opt.size - 2.0 * margin;
  const double top = 30.0;
  const double height = top + margin + scale * kRoot3Half + margin;

  const auto px = [&](const std::array<double, 2>& xy) {
    return std::array<double, 2>{margin + scale * xy[0],
                                 top + margin + scale * (kRoot3Half - xy[1])};
  };
  const auto point_px = [&](const FrequencyTriple& q) { return px(barycentric_to_xy(q)); };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << opt.size << "\" height=\"" << fmt2(height) << "\" viewBox=\"0 0 " << opt.size
     << ' ' << fmt2(height) << "\">\n";
  if (!opt.title.empty())
    os << "<title>" << escape_xml(opt.title) << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (grid != nullptr && cells != nullptr) {
    const int res = grid->resolution();
    os << "<g fill=\"#bcd9ee\" stroke=\"none\">\n";
    for (std::size_t idx = 0; idx < grid->cell_count(); ++idx) {
      if (!(*cells)[idx]) continue;
      const auto c = grid->cell_at(idx);
      // Lattice corners of the cell, as barycentric triples.
      const int ua[3] = {c.up ? c.a : c.a + 1, c.up ? c.a + 1 : c.a,
                         c.up ? c.a : c.a + 1};
      const int vb[3] = {c.up ? c.b : c.b, c.up ? c.b : c.b + 1,
                         c.up ? c.b + 1 : c.b + 1};
      os << "<polygon points=\"";
      for (int k = 0; k < 3; ++k) {
        const double q1 = static_cast<double>(ua[k]) / res;
        const double q2 = static_cast<double>(vb[k]) / res;
        const auto p = point_px(FrequencyTriple{1.0 - q1 - q2, q1, q2});
        os << (k ? " " : "") << fmt2(p[0]) << ',' << fmt2(p[1]);
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }

  // Triangle frame.
  {
    const auto v0 = point_px({1, 0, 0});
    const auto v1 = point_px({0, 1, 0});
    const auto v2 = point_px({0, 0, 1});
    os << "<polygon points=\"" << fmt2(v0[0]) << ',' << fmt2(v0[1]) << ' ' << fmt2(v1[0])
       << ',' << fmt2(v1[1]) << ' ' << fmt2(v2[0]) << ',' << fmt2(v2[1])
       << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }

  os << "<g fill=\"#1f4e79\">\n";
  for (const FrequencyTriple& q : points) {
    const auto p = point_px(q);
    os << "<circle cx=\"" << fmt2(p[0]) << "\" cy=\"" << fmt2(p[1])
       << "\" r=\"1.4\"/>\n";
  }
  os << "</g>\n";

  const char* noun = opt.electoral_labels ? "candidate" : "food";
  const auto v0 = point_px({1, 0, 0});
  const auto v1 = point_px({0, 1, 0});
  const auto v2 = point_px({0, 0, 1});
  os << "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#222222\">\n";
  if (!opt.title.empty())
    os << "<text x=\"" << fmt2(margin) << "\" y=\"20\">" << escape_xml(opt.title)
       << "</text>\n";
  os << "<text x=\"" << fmt2(v0[0]) << "\" y=\"" << fmt2(v0[1] - 8)
     << "\" text-anchor=\"middle\">q0 (pair without " << noun << " 0)</text>\n";
  os << "<text x=\"" << fmt2(v1[0]) << "\" y=\"" << fmt2(v1[1] + 18)
     << "\" text-anchor=\"start\">q1 (pair without " << noun << " 1)</text>\n";
  os << "<text x=\"" << fmt2(v2[0]) << "\" y=\"" << fmt2(v2[1] + 18)
     << "\" text-anchor=\"end\">q2 (pair without " << noun << " 2)</text>\n";
  os << "</g>\n";
  os << "</svg>\n";
}

}  // namespace catsim
