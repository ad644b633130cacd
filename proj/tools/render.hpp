#pragma once

// ASCII and SVG pictures of cycle diagrams.
//
// ASCII: lattice point (x, y) sits at column 2(x-1), row 2(n-y) of a
// (2n-1) x (2n-1) character grid, so y grows upwards.
//   .  diagonal point (i, i)
//   +  permutation point (i, sigma(i)) off the diagonal
//   -  horizontal strand      |  vertical strand
//   ^  crossing; the vertical strand passes over

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotperm/diagram.hpp"
#include "knotperm/seifert.hpp"

namespace knotperm::cli {

struct RenderSpec {
  int cell_size = 40;
  bool show_diagonal = true;
  bool show_crossings = true;
  bool show_seifert = false;
};

inline std::string render_ascii(const Permutation& p) {
  const int n = p.size();
  const int w = 2 * n - 1;
  std::vector<std::string> grid(static_cast<std::size_t>(w), std::string(static_cast<std::size_t>(w), ' '));
  auto at = [&](int col, int row) -> char& { return grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; };

  for (const Segment& s : build_diagram(p).segments) {
    const int x0 = 2 * (s.from.x - 1), y0 = 2 * (n - s.from.y);
    const int x1 = 2 * (s.to.x - 1), y1 = 2 * (n - s.to.y);
    if (s.vertical) {
      for (int r = std::min(y0, y1); r <= std::max(y0, y1); ++r) at(x0, r) = '|';
    } else {
      for (int c = std::min(x0, x1); c <= std::max(x0, x1); ++c) at(c, y0) = '-';
    }
  }
  for (const Crossing& c : c_pairs(p).pairs) at(2 * (c.at.x - 1), 2 * (n - c.at.y)) = '^';
  for (int i = 1; i <= n; ++i) {
    at(2 * (i - 1), 2 * (n - i)) = '.';
    if (p(i) != i) at(2 * (i - 1), 2 * (n - p(i))) = '+';
  }
  std::string out;
  for (auto& row : grid) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace detail

/// Lattice (x, y) maps to pixel (x * cell, (n + 1 - y) * cell).
inline std::string render_svg(const Permutation& p, const RenderSpec& spec) {
  if (spec.cell_size < 4) throw std::invalid_argument("cell size must be at least 4");
  using detail::num;
  const int n = p.size();
  const double c = spec.cell_size;
  const double side = (n + 1) * c;
  auto px = [&](double x) { return x * c; };
  auto py = [&](double y) { return (n + 1 - y) * c; };
  auto line = [&](double x0, double y0, double x1, double y1, const char* cls) {
    return "  <line class=\"" + std::string(cls) + "\" x1=\"" + num(px(x0)) + "\" y1=\"" + num(py(y0)) + "\" x2=\"" +
           num(px(x1)) + "\" y2=\"" + num(py(y1)) + "\"/>\n";
  };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(side) + "\" height=\"" + num(side) +
                    "\" viewBox=\"0 0 " + num(side) + " " + num(side) + "\">\n";
  out += "  <style>.grid{stroke:#ccc;stroke-width:1}.diagonal{stroke:#888;stroke-dasharray:4 4}"
         ".strand{stroke:#000;stroke-width:2}.dot{fill:#000}.seifert{fill:none;stroke:#c00;stroke-width:1.5}</style>\n";
  for (int k = 1; k <= n; ++k) {
    out += line(k, 0.5, k, n + 0.5, "grid");
    out += line(0.5, k, n + 0.5, k, "grid");
  }
  if (spec.show_diagonal) out += line(1, 1, n, n, "diagonal");

  const CrossingSet xs = c_pairs(p);
  const double gap = 0.2;
  for (const Segment& s : build_diagram(p).segments) {
    if (s.vertical) continue;
    // Horizontal strands pass under, so they are broken around crossings.
    std::vector<int> cuts;
    if (spec.show_crossings)
      for (const Crossing& x : xs.pairs)
        if (x.horizontal == s.owner) cuts.push_back(x.at.x);
    std::sort(cuts.begin(), cuts.end());
    double lo = std::min(s.from.x, s.to.x);
    const double hi = std::max(s.from.x, s.to.x);
    for (int x : cuts) {
      out += line(lo, s.from.y, x - gap, s.from.y, "strand");
      lo = x + gap;
    }
    out += line(lo, s.from.y, hi, s.from.y, "strand");
  }
  for (const Segment& s : build_diagram(p).segments)
    if (s.vertical) out += line(s.from.x, s.from.y, s.to.x, s.to.y, "strand");
  for (int i = 1; i <= n; ++i)
    if (p(i) != i)
      out += "  <circle class=\"dot\" cx=\"" + num(px(i)) + "\" cy=\"" + num(py(p(i))) + "\" r=\"" + num(c / 8) + "\"/>\n";

  if (spec.show_seifert) {
    for (const SeifertCircle& circle : seifert_circles(p).circles) {
      out += "  <polygon class=\"seifert\" points=\"";
      for (std::size_t k = 0; k < circle.vertices.size(); ++k) {
        if (k) out += ' ';
        const Point v = circle.vertices[k];
        out += num(px(static_cast<double>(v.x) / kSeifertScale)) + "," + num(py(static_cast<double>(v.y) / kSeifertScale));
      }
      out += "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace knotperm::cli
