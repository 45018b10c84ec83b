#include "gts/stencils.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gts/cap.hpp"
#include "gts/frame.hpp"

namespace gts {

StencilSet deriveStencils() {
  // The cap coefficients are affine combinations of net nodes with weights
  // summing to one. Run the pipeline on the zero net to capture the
  // contribution of the ring (it must vanish relative to the inner nodes'
  // basis responses summing to one), then on the 18 inner basis nets.
  TNetT1 zero;
  for (auto& r : zero.coarse)
    for (auto& p : r) p = Vec3{};
  for (auto& r : zero.fine)
    for (auto& p : r) p = Vec3{};

  auto capOf = [](const TNetT1& n) { return buildCapT1(buildFrameT1(n)).pl; };

  const BBPatch base = capOf(zero);

  StencilSet s;
  std::array<Vec3, 18> nodes{};
  for (int k = 0; k < 18; ++k) {
    TNetT1 net = zero;
    nodes[k] = Vec3{1, 0, 0};
    if (k > 0) nodes[k - 1] = Vec3{};
    net.setInnerNodes(nodes);
    const BBPatch resp = capOf(net);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j)
        s.w[i][j][k] = (resp.at(i, j).x - base.at(i, j).x) * 144.0;
  }

  // Affine sanity: weights over the inner nodes must sum to 144 (the ring
  // carries no weight for the cap) and the zero net must map to zero.
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      if (base.at(i, j).norm() > 1e-12)
        throw std::logic_error("deriveStencils: cap depends on ring nodes");
      if (std::abs(s.sum(i, j) - 144.0) > 1e-9)
        throw std::logic_error("deriveStencils: weights do not sum to 144");
    }
  return s;
}

BBPatch applyStencils(const std::array<Vec3, 18>& innerNodes, const StencilSet& s) {
  BBPatch p(4, 4);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      if (std::abs(s.sum(i, j) - 144.0) > 1e-8)
        throw std::invalid_argument("applyStencils: stencil sum is not 144");
      Vec3 acc{};
      for (int k = 0; k < 18; ++k) acc += innerNodes[k] * s.w[i][j][k];
      p.at(i, j) = acc / 144.0;
    }
  return p;
}

std::string formatStencils(const StencilSet& s) {
  std::ostringstream os;
  os << "gts-stencils/1 t1-left-cap scale=144 nodes=18\n";
  os.precision(17);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      os << "stencil " << i << " " << j << "\n";
      // two rows of four, two rows of five
      int k = 0;
      for (int row = 0; row < 4; ++row) {
        const int len = row < 2 ? 4 : 5;
        for (int c = 0; c < len; ++c) os << (c ? " " : "") << s.w[i][j][k++];
        os << "\n";
      }
    }
  return os.str();
}

StencilSet parseStencils(const std::string& text) {
  std::istringstream is(text);
  std::string header, tag;
  std::getline(is, header);
  if (header.rfind("gts-stencils/1", 0) != 0)
    throw std::runtime_error("parseStencils: bad header");
  StencilSet s;
  for (int n = 0; n < 25; ++n) {
    int i, j;
    is >> tag >> i >> j;
    if (!is || tag != "stencil") throw std::runtime_error("parseStencils: bad block");
    for (int k = 0; k < 18; ++k) is >> s.w[i][j][k];
  }
  if (!is) throw std::runtime_error("parseStencils: truncated");
  return s;
}

}  // namespace gts
