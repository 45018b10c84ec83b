#pragma once

#include <array>

#include "gts/spline.hpp"
#include "gts/surface.hpp"
#include "gts/tnet.hpp"

namespace gts {

// Bi-3 frame around a T1 net, canonical orientation (refined side up).
// The cell below the pentagon is split at its parameter midpoint into
// splitL/splitR; fineL/fineR are the two cells above the pentagon. All
// shared-edge coefficient rows agree exactly; the four joins
// left0|splitL, right0|splitR, left2|fineL, right2|fineR are C1 with
// parameter (1/2, 2, 1, 1 respectively), everything else frame-internal
// is C2.
struct FrameT1 {
  std::array<BBPatch, 3> left;   // column [x0,x1], rows bottom to top
  std::array<BBPatch, 3> right;  // column [x2,x3]
  BBPatch splitL, splitR;        // halves of the cell below the pentagon
  BBPatch fineL, fineR;          // cells above the pentagon

  FrameT1 mirroredX() const;
};

FrameT1 buildFrameT1(const TNetT1& net);

// Re-connected regular nets (exposed for tests and diagnostics).
inline ControlGrid reconnectNets(const TNetT1& net, bool leftSide) {
  return leftSide ? t1LeftNet(net) : t1RightNet(net);
}

// The two hole-facing junction points (the averaged points) with their
// C2-completed direct neighbors: rowL/rowR are the two cubic rows meeting
// at rowL[3] = rowR[0]; equal unit intervals.
void completeJunction(Curve& rowL, Curve& rowR);

// Frame for a T3 net (two T-junctions opposite one). Canonical
// orientation: the 2-spaced grid on top, the 3-spaced grid below. The
// bottom frame row holds four pieces obtained by subdividing the two wide
// cells at ratio 2:1 / 1:2; the top row holds [0,2], the evenly split
// halves of [2,4], and [4,6].
struct FrameT3 {
  std::array<BBPatch, 3> left;     // kinked column west of the hole
  std::array<BBPatch, 3> right;
  std::array<BBPatch, 4> bottom;   // pieces (2,1,1,2) wide, left to right
  std::array<BBPatch, 4> top;      // pieces (2,1,1,2)
  FrameT3 mirroredX() const;
};

FrameT3 buildFrameT3(const TNetT3& net);

}  // namespace gts
