#pragma once

#include <array>
#include <string>

#include "gts/bezier.hpp"
#include "gts/tnet.hpp"

namespace gts {

// Weight masks expressing each bi-4 coefficient of the left T1 cap patch
// as an affine combination of the 18 interior net nodes. Stored times 144;
// each stencil sums to 144 exactly (up to roundoff).
struct StencilSet {
  // stencil[i][j][k]: weight (x144) of inner node k for cap coefficient
  // (i,j); node order as TNetT1::innerNodes().
  std::array<std::array<std::array<double, 18>, 5>, 5> w{};

  double sum(int i, int j) const {
    double s = 0;
    for (double x : w[i][j]) s += x;
    return s;
  }
};

// Runs the frame+cap pipeline on the 18 scalar basis nets and collects the
// weights. Throws if the pipeline turns out to depend on anything but the
// interior nodes affinely (construction bug signal).
StencilSet deriveStencils();

// Applies a stencil set to interior nodes; data integrity checked against
// the 144 sum.
BBPatch applyStencils(const std::array<Vec3, 18>& innerNodes, const StencilSet& s);

// Plain-text export (weights x144, one stencil per block) for external
// verification, and the matching parser.
std::string formatStencils(const StencilSet& s);
StencilSet parseStencils(const std::string& text);

}  // namespace gts
