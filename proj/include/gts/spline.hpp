#pragma once

#include <array>
#include <vector>

#include "gts/bezier.hpp"
#include "gts/tnet.hpp"

namespace gts {

// Uniform cubic B-spline segment to BB-form:
//   c0 = (P0 + 4 P1 + P2)/6, c1 = (2 P1 + P2)/3,
//   c2 = (P1 + 2 P2)/3,      c3 = (P1 + 4 P2 + P3)/6.
std::array<Vec3, 4> cubicSegmentToBB(const Vec3& p0, const Vec3& p1,
                                     const Vec3& p2, const Vec3& p3);

// Tensor-product conversion of one 4x4 control window (win[i][j], i along
// u, j along v) into a bi-3 patch.
BBPatch bsplineToBB(const std::array<std::array<Vec3, 4>, 4>& win);

// Regular control grid with named cell conversion. grid[r][c], rows along
// v (bottom to top), columns along u.
struct ControlGrid {
  int rows = 0, cols = 0;
  std::vector<Vec3> pts;
  Vec3& at(int r, int c) { return pts[static_cast<size_t>(r) * cols + c]; }
  const Vec3& at(int r, int c) const { return pts[static_cast<size_t>(r) * cols + c]; }
};

// Converts the cell between columns (cu, cu+1) and rows (rv, rv+1); the
// window spans columns cu-1..cu+2 and rows rv-1..rv+2.
BBPatch convertCell(const ControlGrid& g, int cu, int rv);

// Re-connected regular nets of a T1 net (6x6 grids). The left net aligns
// columns from the left: the inserted fine line adopts the next coarse
// line to its right below the transition; the right net mirrors this.
ControlGrid t1LeftNet(const TNetT1& net);
ControlGrid t1RightNet(const TNetT1& net);

// Same for T3 nets (7-wide left/right re-connections of 7 vs 8 columns).
ControlGrid t3LeftNet(const TNetT3& net);
ControlGrid t3RightNet(const TNetT3& net);

// C2-prolongation data of the surrounding spline along the outer boundary
// of a net's frame region: degree-3 strips of depth 3 rows (position + two
// inner rows), one per side, each stored as a patch-row triple per cell.
struct BorderStrip {
  // Outer three BB rows of each boundary cell, ordered along the side.
  // rows[k] is the k-th row counted from the outside in.
  struct CellRows {
    Curve rows[3];
  };
  std::vector<CellRows> cells;
};

struct TensorBorder {
  // Sides in order: bottom, right, top, left (counterclockwise around the
  // frame region); each strip's cells run in the side's natural direction.
  BorderStrip side[4];
};

TensorBorder tensorBorderT1(const TNetT1& net);

}  // namespace gts
