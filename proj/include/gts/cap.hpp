#pragma once

#include <array>
#include <vector>

#include "gts/frame.hpp"
#include "gts/surface.hpp"
#include "gts/tnet.hpp"

namespace gts {

// Tables of (a(u), b(u)) in the conventions of the construction: the edge
// parameter u runs along the shared curve starting at the refined-side end
// for vertical edges and left to right for horizontal ones; the transversal
// points from the frame into the cap.
struct ReparamT1 {
  Reparameterization left;    // a = 1 - u/2, b = 0
  Reparameterization top;     // a = 1, b = (1-u)u       (split-cell side)
  Reparameterization bottom;  // a = 1, b = -(1-u)u/2    (fine-cell side)
};
ReparamT1 reparamTableT1();

struct ReparamT3 {
  Reparameterization left;         // a = 1 - u/3, b = 0
  Reparameterization topLeft;      // a = 1, b = (1-u)u/2
  Reparameterization bottomLeft;   // a = 1, b = -(1-u)u/3
  Reparameterization topRight;     // b negated
  Reparameterization bottomRight;  // b negated
};
ReparamT3 reparamTableT3();

struct ReparamT2 {
  Reparameterization topLeft;      // a = 1 - u/4,   b =  (1-u)u/2
  Reparameterization topRight;     // a = 3/4 - u/4, b = -(1-u)u/2
  Reparameterization bottomLeft;   // a = 1 - u/4,   b = -(1-u)u/4
  Reparameterization bottomRight;  // a = 3/4 - u/4, b =  (1-u)u/4
};
ReparamT2 reparamTableT2();

// Reparameterized boundary data of degree 4 and depth 1: position row and
// the cross-derivative row a*D + b*P' in the travel direction (from the
// frame into the cap). jet must carry position (curves[0]) and first
// cross-derivative (curves[1]), already oriented along the common
// parameter and in travel direction.
struct G1Border {
  Curve pos;    // degree 4
  Curve cross;  // degree 4
};
G1Border g1BoundaryData(const Jet& jet, const Reparameterization& rho);

struct CapT1 {
  BBPatch pl, pr;  // bi-4, left and right pentagon halves
};
CapT1 buildCapT1(const FrameT1& frame);

struct CapT3 {
  std::array<BBPatch, 4> p;  // bi-4 pieces left to right, widths (2,1,1,2)
};
CapT3 buildCapT3(const FrameT3& frame);

// Assembled net surfaces: frame + cap patches with the full join table
// (frame-internal C2/C1-beta, cap-frame G1 with the declared tables, cap
// internal joins, in canonical orientation).
GTSurface assembleT1(const TNetT1& net);
GTSurface assembleT3(const TNetT3& net);
GTSurface assembleT2(const TNetT2& net);

}  // namespace gts
