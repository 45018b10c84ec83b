#include "gts/frame.hpp"

#include <cassert>

namespace gts {

void completeJunction(Curve& rowL, Curve& rowR) {
  assert(rowL.size() == 4 && rowR.size() == 4);
  const Vec3 q = (rowL[3] + rowR[0]) * 0.5;
  const Vec3 d = (rowR[2] - rowL[1]) * 0.25;
  rowL[2] = q - d;
  rowR[1] = q + d;
  rowL[3] = q;
  rowR[0] = q;
}

FrameT1 buildFrameT1(const TNetT1& net) {
  const ControlGrid L = t1LeftNet(net);
  const ControlGrid R = t1RightNet(net);

  FrameT1 f;
  for (int k = 0; k < 3; ++k) {
    f.left[k] = convertCell(L, 1, 1 + k);
    f.right[k] = convertCell(R, 3, 1 + k);
  }

  // The two candidates for the cell below the pentagon differ only in
  // their hole-facing (top) row; each half keeps its own side's version.
  const BBPatch bottomL = convertCell(L, 2, 1);
  const BBPatch bottomR = convertCell(R, 2, 1);
  f.splitL = subdivide(bottomL, Direction::U, 0.5).first;
  f.splitR = subdivide(bottomR, Direction::U, 0.5).second;

  f.fineL = convertCell(L, 2, 3);
  f.fineR = convertCell(R, 2, 3);

  // Resolve the overlap points by averaging and restore C2 of the two
  // hole-facing boundary curves.
  Curve a = f.splitL.row(3), b = f.splitR.row(3);
  completeJunction(a, b);
  f.splitL.setRow(3, a);
  f.splitR.setRow(3, b);

  Curve c = f.fineL.row(0), d = f.fineR.row(0);
  completeJunction(c, d);
  f.fineL.setRow(0, c);
  f.fineR.setRow(0, d);

  return f;
}

FrameT1 FrameT1::mirroredX() const {
  FrameT1 m;
  for (int k = 0; k < 3; ++k) {
    m.left[k] = right[k].mirroredU();
    m.right[k] = left[k].mirroredU();
  }
  m.splitL = splitR.mirroredU();
  m.splitR = splitL.mirroredU();
  m.fineL = fineR.mirroredU();
  m.fineR = fineL.mirroredU();
  return m;
}

}  // namespace gts
