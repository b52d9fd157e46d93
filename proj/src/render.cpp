#include "relmix/render.hpp"

#include <sstream>

namespace relmix {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;
constexpr long kScale = 40;
constexpr long kMargin = 30;

}  // namespace

std::string render_svg(const std::vector<OrthantPolyhedron>& polyhedra) {
  if (polyhedra.empty()) {
    throw Error(ErrorKind::Input, "render: no polyhedra given");
  }
  for (const OrthantPolyhedron& b : polyhedra) {
    if (b.dim() != 2) {
      throw DimensionMismatch("render: only 2-dimensional polyhedra");
    }
  }

  Int axis_max_i = 2;
  for (const OrthantPolyhedron& b : polyhedra) {
    Int m = b.max_generator_sum() + 1;
    if (m > axis_max_i) axis_max_i = m;
  }
  const long axis_max = axis_max_i.get_si();
  const long size = 2 * kMargin + axis_max * kScale;

  auto px = [&](const Int& x) { return kMargin + x.get_si() * kScale; };
  auto py = [&](const Int& y) { return kMargin + (axis_max - y.get_si()) * kScale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
      << "\">\n";
  svg << "<rect width=\"" << size << "\" height=\"" << size
      << "\" fill=\"white\"/>\n";

  // Lattice grid.
  for (long k = 0; k <= axis_max; ++k) {
    const char* stroke = (k == 0) ? "#404040" : "#d0d0d0";
    svg << "<line x1=\"" << (kMargin + k * kScale) << "\" y1=\"" << kMargin
        << "\" x2=\"" << (kMargin + k * kScale) << "\" y2=\""
        << (kMargin + axis_max * kScale) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\""
        << (kMargin + axis_max * kScale) - k * kScale << "\" x2=\""
        << (kMargin + axis_max * kScale) << "\" y2=\""
        << (kMargin + axis_max * kScale) - k * kScale << "\" stroke=\""
        << stroke << "\" stroke-width=\"1\"/>\n";
  }

  // Shaded complement region of each polyhedron: the area of the orthant
  // below the generator staircase.
  for (size_t p = 0; p < polyhedra.size(); ++p) {
    const OrthantPolyhedron& b = polyhedra[p];
    const char* color = kPalette[p % kPaletteSize];
    std::ostringstream pointlist;
    pointlist << px(Int(0)) << "," << py(Int(0));
    for (const IntVector& g : b.generators()) {
      pointlist << " " << px(g[0]) << "," << py(g[1]);
    }
    svg << "<polygon points=\"" << pointlist.str() << "\" fill=\"" << color
        << "\" fill-opacity=\"0.30\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
  }

  // Generator markers and labels.
  for (size_t p = 0; p < polyhedra.size(); ++p) {
    const OrthantPolyhedron& b = polyhedra[p];
    const char* color = kPalette[p % kPaletteSize];
    for (const IntVector& g : b.generators()) {
      svg << "<circle cx=\"" << px(g[0]) << "\" cy=\"" << py(g[1])
          << "\" r=\"4\" fill=\"" << color << "\"/>\n";
      svg << "<text x=\"" << (px(g[0]) + 6) << "\" y=\"" << (py(g[1]) - 6)
          << "\" font-family=\"monospace\" font-size=\"12\" fill=\"" << color
          << "\">(" << g[0] << "," << g[1] << ")</text>\n";
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace relmix
