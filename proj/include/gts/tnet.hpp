#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gts/geometry.hpp"

namespace gts {

enum class TNetKind : uint8_t { T1, T2Crossing, T3Parallel };

// Local control net around an isolated T-junction, canonically oriented:
// the refined side (the one carrying the extra vertical line) is on top.
// Rows run bottom to top. Coarse rows hold 6 nodes over columns
// x = (-2,0,2,4,6,8); fine rows hold 7 over x = (-2,0,2,3,4,6,8) -- the
// inserted line sits between columns 2 and 4. The pentagon spans [2,4]x[2,4]
// in the canonical embedding, rows y = (-2,0,2,4,6,8).
struct TNetT1 {
  std::array<std::array<Vec3, 6>, 3> coarse;  // rows y-1, y0, y1
  std::array<std::array<Vec3, 7>, 3> fine;    // rows y2, y3, y4

  // The 18 interior nodes in stencil order: two rows of four (coarse y0,
  // y1 at columns 0,2,4,6), then two rows of five (fine y2, y3 at columns
  // 0,2,3,4,6); bottom to top, left to right.
  std::array<Vec3, 18> innerNodes() const;
  void setInnerNodes(const std::array<Vec3, 18>& n);

  TNetT1 mirroredX() const;  // swap left and right

  template <class F>
  void transform(F&& f) {
    for (auto& r : coarse)
      for (auto& p : r) p = f(p);
    for (auto& r : fine)
      for (auto& p : r) p = f(p);
  }
};

// Net for two T-junctions opposite a third: a nominally 7-sided face whose
// bottom side lies on a 3-spaced grid (one terminating line, at x=3) and
// whose top side lies on a 2-spaced grid (terminating lines at x=2 and
// x=4). Canonical footprint [0,6]x[2,4], rows y = (-2,0,2,4,6,8).
// wide rows: columns x = (-6,-3,0,3,6,9,12); narrow rows:
// x = (-4,-2,0,2,4,6,8,10).
struct TNetT3 {
  std::array<std::array<Vec3, 7>, 3> wide;    // rows y-1, y0, y1
  std::array<std::array<Vec3, 8>, 3> narrow;  // rows y2, y3, y4

  std::vector<Vec3> innerNodes() const;  // 22 nodes, rows bottom to top

  TNetT3 mirroredX() const;

  template <class F>
  void transform(F&& f) {
    for (auto& r : wide)
      for (auto& p : r) p = f(p);
    for (auto& r : narrow)
      for (auto& p : r) p = f(p);
  }
};

// Net for two T-junctions with crossing directions: a nominally 6-sided
// face (hole) at [2,4]^2 on the line grid x,y in (0,1,2,3,4,6,8). The line
// x=3 exists only below y=2 (T-vertex at (3,2)); the line y=3 only left of
// x=2 (T-vertex at (2,3)). Lines x=0,1 run full height, y=0,1 full width.
struct TNetT2 {
  // node[xi][yi] over the index grid; validity via exists().
  std::array<std::array<Vec3, 7>, 7> node;

  static constexpr std::array<double, 7> lines = {0, 1, 2, 3, 4, 6, 8};
  static bool exists(int xi, int yi) {
    return (xi != 3 || yi <= 2) && (yi != 3 || xi <= 2);
  }

  std::vector<Vec3> innerNodes() const;  // all 42 valid nodes, row-major

  TNetT2 transposed() const;  // swap x and y (diagonal symmetry)

  template <class F>
  void transform(F&& f) {
    for (int xi = 0; xi < 7; ++xi)
      for (int yi = 0; yi < 7; ++yi)
        if (exists(xi, yi)) node[xi][yi] = f(node[xi][yi]);
  }
};

// Canonical flat embeddings (z = 0).
TNetT1 canonicalT1();
TNetT3 canonicalT3();
TNetT2 canonicalT2();

// Canonical nets sampled from one global bicubic polynomial: every node is
// the tensor blossom of g over its local knots, so the whole net lies on a
// single spline and the construction must reproduce g.
struct Bicubic {
  Vec3 c[4][4];  // coefficients of x^k y^l
  Vec3 eval(double x, double y) const;
  Vec3 blossom(double x1, double x2, double x3, double y1, double y2, double y3) const;
};

TNetT1 t1FromBicubic(const Bicubic& g);
TNetT3 t3FromBicubic(const Bicubic& g);
TNetT2 t2FromBicubic(const Bicubic& g);

}  // namespace gts
