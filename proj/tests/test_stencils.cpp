#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gts/cap.hpp"
#include "gts/stencils.hpp"
#include "testutil.hpp"

using namespace gts;
using namespace gts::testing;

TEST_CASE("derived corner stencil is the published 3x3 mask") {
  StencilSet s = deriveStencils();
  // coefficient (0,0): 4,16,4 / 16,64,16 over the two coarse rows'
  // first three nodes, 4,16,4 on the first fine row, zero elsewhere
  const double want[18] = {4, 16, 4, 0, 16, 64, 16, 0, 4, 16, 4, 0, 0, 0, 0, 0, 0, 0};
  for (int k = 0; k < 18; ++k)
    CHECK(s.w[0][0][k] == doctest::Approx(want[k]).epsilon(1e-12));
}

TEST_CASE("every derived stencil sums to 144") {
  StencilSet s = deriveStencils();
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      CHECK(std::abs(s.sum(i, j) - 144.0) < 1e-10);
}

TEST_CASE("all-equal nodes give a constant patch (partition of unity)") {
  StencilSet s = deriveStencils();
  std::array<Vec3, 18> nodes;
  const Vec3 P{0.3, -4, 2};
  nodes.fill(P);
  BBPatch p = applyStencils(nodes, s);
  for (const auto& c : p.coeffs) CHECK((c - P).norm() < 1e-13);
}

TEST_CASE("stencil application equals the constructive pipeline") {
  StencilSet s = deriveStencils();
  auto g = rng(400);
  for (int t = 0; t < 50; ++t) {
    TNetT1 n = canonicalT1();
    n.transform([&](const Vec3& p) { return p + randomPoint(g, 0.4); });
    BBPatch direct = buildCapT1(buildFrameT1(n)).pl;
    BBPatch fast = applyStencils(n.innerNodes(), s);
    double scale = direct.bbox();
    for (size_t i = 0; i < direct.coeffs.size(); ++i)
      CHECK((direct.coeffs[i] - fast.coeffs[i]).norm() < 1e-9 * scale);
  }
}

TEST_CASE("linearity of stencil application") {
  StencilSet s = deriveStencils();
  auto g = rng(401);
  std::array<Vec3, 18> X, Y, Z;
  for (int k = 0; k < 18; ++k) {
    X[k] = randomPoint(g);
    Y[k] = randomPoint(g);
    Z[k] = X[k] * 0.25 + Y[k] * 0.75;
  }
  BBPatch px = applyStencils(X, s), py = applyStencils(Y, s), pz = applyStencils(Z, s);
  for (size_t i = 0; i < pz.coeffs.size(); ++i)
    CHECK((pz.coeffs[i] - (px.coeffs[i] * 0.25 + py.coeffs[i] * 0.75)).norm() < 1e-13);
}

TEST_CASE("stencil text round-trip") {
  StencilSet s = deriveStencils();
  StencilSet t = parseStencils(formatStencils(s));
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k < 18; ++k) CHECK(s.w[i][j][k] == t.w[i][j][k]);
}

TEST_CASE("legible entries of the published table match the derived set") {
  // The published table is partially corrupted; full stencils are asserted
  // only where the transcription is unambiguous, fragments elsewhere.
  StencilSet s = deriveStencils();

  // (0,1): 1,4,1 / 16,64,16 / 7,28,7
  const double c01[18] = {1, 4, 1, 0, 16, 64, 16, 0, 7, 28, 7, 0, 0, 0, 0, 0, 0, 0};
  for (int k = 0; k < 18; ++k) CHECK(s.w[0][1][k] == doctest::Approx(c01[k]).epsilon(1e-12));

  // (1,0): coarse rows 5/2,16,11/2 and 10,64,22 (legible); the fine row
  // repeats the first by the construction's structure.
  const double c10[8] = {2.5, 16, 5.5, 0, 10, 64, 22, 0};
  for (int k = 0; k < 8; ++k) CHECK(s.w[1][0][k] == doctest::Approx(c10[k]).epsilon(1e-12));

  // (2,0): rows 3/2,15,15/2 / 6,60,30 and the fragments 11/8, 35/4, -1/8.
  const double c20[8] = {1.5, 15, 7.5, 0, 6, 60, 30, 0};
  for (int k = 0; k < 8; ++k) CHECK(s.w[2][0][k] == doctest::Approx(c20[k]).epsilon(1e-12));
  CHECK(s.w[2][0][8] == doctest::Approx(11.0 / 8).epsilon(1e-12));
  CHECK(s.w[2][0][10] == doctest::Approx(35.0 / 4).epsilon(1e-12));
  CHECK(s.w[2][0][12] == doctest::Approx(-1.0 / 8).epsilon(1e-12));

  // (2,1): middle coarse row 5,58,33; fragment 267/16.
  CHECK(s.w[2][1][4] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(s.w[2][1][5] == doctest::Approx(58.0).epsilon(1e-12));
  CHECK(s.w[2][1][6] == doctest::Approx(33.0).epsilon(1e-12));
  CHECK(s.w[2][1][10] == doctest::Approx(267.0 / 16).epsilon(1e-12));

  // (2,2): fragments 19/6, 43, 25 / 7/6, 116/3, 31, 4/3, -1/6.
  CHECK(s.w[2][2][4] == doctest::Approx(19.0 / 6).epsilon(1e-12));
  CHECK(s.w[2][2][5] == doctest::Approx(43.0).epsilon(1e-12));
  CHECK(s.w[2][2][6] == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(s.w[2][2][8] == doctest::Approx(7.0 / 6).epsilon(1e-12));
  CHECK(s.w[2][2][9] == doctest::Approx(116.0 / 3).epsilon(1e-12));
  CHECK(s.w[2][2][10] == doctest::Approx(31.0).epsilon(1e-12));

  // (3,0): fragments 7/2, 107/2, 77/2.
  CHECK(s.w[3][0][4] == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(s.w[3][0][5] == doctest::Approx(107.0 / 2).epsilon(1e-12));
  CHECK(s.w[3][0][6] == doctest::Approx(77.0 / 2).epsilon(1e-12));

  // (4,3): bottom prolongation side 7/2, 35/2, 35/2 and 16,64,64,16-like
  // fine row 16,64,16... mirrored mass: check the coarse row fragments.
  CHECK(s.w[4][3][4] == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(s.w[4][3][5] == doctest::Approx(17.5).epsilon(1e-12));
  CHECK(s.w[4][3][6] == doctest::Approx(17.5).epsilon(1e-12));
}
