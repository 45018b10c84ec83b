#include "gts/spline.hpp"

#include <cassert>
#include <stdexcept>

namespace gts {

std::array<Vec3, 4> cubicSegmentToBB(const Vec3& p0, const Vec3& p1,
                                     const Vec3& p2, const Vec3& p3) {
  return {(p0 + p1 * 4.0 + p2) / 6.0, (p1 * 2.0 + p2) / 3.0,
          (p1 + p2 * 2.0) / 3.0, (p1 + p2 * 4.0 + p3) / 6.0};
}

BBPatch bsplineToBB(const std::array<std::array<Vec3, 4>, 4>& win) {
  // v-direction first (per column), then u.
  std::array<std::array<Vec3, 4>, 4> tmp;  // tmp[i][j]: column i, BB row j
  for (int i = 0; i < 4; ++i)
    tmp[i] = cubicSegmentToBB(win[i][0], win[i][1], win[i][2], win[i][3]);
  BBPatch p(3, 3);
  for (int j = 0; j < 4; ++j) {
    auto row = cubicSegmentToBB(tmp[0][j], tmp[1][j], tmp[2][j], tmp[3][j]);
    for (int i = 0; i < 4; ++i) p.at(i, j) = row[i];
  }
  return p;
}

BBPatch convertCell(const ControlGrid& g, int cu, int rv) {
  if (cu < 1 || cu + 2 >= g.cols || rv < 1 || rv + 2 >= g.rows)
    throw std::domain_error("convertCell: window outside grid");
  std::array<std::array<Vec3, 4>, 4> win;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) win[i][j] = g.at(rv - 1 + j, cu - 1 + i);
  return bsplineToBB(win);
}

ControlGrid t1LeftNet(const TNetT1& net) {
  ControlGrid g;
  g.rows = 6;
  g.cols = 6;
  g.pts.resize(36);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) g.at(r, c) = net.coarse[r][c];
  // fine rows drop the last column: the inserted line (fine column 3)
  // rides over coarse column 3, shifting the tail right.
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) g.at(3 + r, c) = net.fine[r][c];
  return g;
}

ControlGrid t1RightNet(const TNetT1& net) {
  ControlGrid g;
  g.rows = 6;
  g.cols = 6;
  g.pts.resize(36);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) g.at(r, c) = net.coarse[r][c];
  // fine rows drop the first column: the inserted line rides over coarse
  // column 2, shifting the head left.
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) g.at(3 + r, c) = net.fine[r][c + 1];
  return g;
}

ControlGrid t3LeftNet(const TNetT3& net) {
  ControlGrid g;
  g.rows = 6;
  g.cols = 7;
  g.pts.resize(42);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) g.at(r, c) = net.wide[r][c];
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) g.at(3 + r, c) = net.narrow[r][c];
  return g;
}

ControlGrid t3RightNet(const TNetT3& net) {
  ControlGrid g;
  g.rows = 6;
  g.cols = 7;
  g.pts.resize(42);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) g.at(r, c) = net.wide[r][c];
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) g.at(3 + r, c) = net.narrow[r][c + 1];
  return g;
}

namespace {

// Outer three BB rows of a patch along one side, outside in.
BorderStrip::CellRows outerRows(const BBPatch& p, PatchEdge e) {
  BorderStrip::CellRows cr;
  switch (e) {
    case PatchEdge::Vmin:
      for (int k = 0; k < 3; ++k) cr.rows[k] = p.row(k);
      break;
    case PatchEdge::Vmax:
      for (int k = 0; k < 3; ++k) cr.rows[k] = p.row(p.dv - k);
      break;
    case PatchEdge::Umin:
      for (int k = 0; k < 3; ++k) cr.rows[k] = p.column(k);
      break;
    case PatchEdge::Umax:
      for (int k = 0; k < 3; ++k) cr.rows[k] = p.column(p.du - k);
      break;
  }
  return cr;
}

}  // namespace

TensorBorder tensorBorderT1(const TNetT1& net) {
  // The outer rows do not depend on the re-connection choice: the kinked
  // column enters only the innermost rows of each window. Convert the
  // boundary cells from the matching nets and keep the outer strips.
  ControlGrid L = t1LeftNet(net), R = t1RightNet(net);
  TensorBorder tb;
  // bottom side: cells (1..3, 1) of the left net (footprint x0..x3)
  for (int cu = 1; cu <= 3; ++cu)
    tb.side[0].cells.push_back(outerRows(convertCell(L, cu, 1), PatchEdge::Vmin));
  // right side: cells (3, 1..3) of the right net
  for (int rv = 1; rv <= 3; ++rv)
    tb.side[1].cells.push_back(outerRows(convertCell(R, 3, rv), PatchEdge::Umax));
  // top side: cells (1..4?, 3): footprint has four top cells in the fine
  // row family; use left net for the two left cells, right net for the two
  // right ones (their outer rows agree where both exist).
  tb.side[2].cells.push_back(outerRows(convertCell(L, 1, 3), PatchEdge::Vmax));
  tb.side[2].cells.push_back(outerRows(convertCell(L, 2, 3), PatchEdge::Vmax));
  tb.side[2].cells.push_back(outerRows(convertCell(R, 2, 3), PatchEdge::Vmax));
  tb.side[2].cells.push_back(outerRows(convertCell(R, 3, 3), PatchEdge::Vmax));
  // left side: cells (1, 1..3) of the left net
  for (int rv = 1; rv <= 3; ++rv)
    tb.side[3].cells.push_back(outerRows(convertCell(L, 1, rv), PatchEdge::Umin));
  return tb;
}

}  // namespace gts
