#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gts/audit.hpp"
#include "gts/frame.hpp"
#include "testutil.hpp"

using namespace gts;
using namespace gts::testing;

namespace {

TNetT1 randomT1(std::mt19937_64& g, double amp = 0.35) {
  TNetT1 n = canonicalT1();
  n.transform([&](const Vec3& p) { return p + randomPoint(g, amp); });
  return n;
}

double planeResidual(const BBPatch& p) {
  double worst = 0.0;
  for (const auto& c : p.coeffs) worst = std::max(worst, std::abs(c.z));
  return worst;
}

}  // namespace

TEST_CASE("reconnected nets share the coarse rows and differ in fine pairing") {
  TNetT1 n = canonicalT1();
  ControlGrid L = t1LeftNet(n), R = t1RightNet(n);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c)
      CHECK((L.at(r, c) - R.at(r, c)).norm() == 0.0);
  // left net keeps the left fine columns, right net the right ones
  CHECK(L.at(3, 3).x == 3.0);  // inserted line over coarse column 3 (x=4)
  CHECK(R.at(3, 2).x == 3.0);  // inserted line over coarse column 2 (x=2)
}

TEST_CASE("flat net: all ten patches planar and in-plane exact") {
  FrameT1 f = buildFrameT1(canonicalT1());
  for (const auto& p : f.left) CHECK(planeResidual(p) == 0.0);
  for (const auto& p : f.right) CHECK(planeResidual(p) == 0.0);
  CHECK(planeResidual(f.splitL) == 0.0);
  CHECK(planeResidual(f.splitR) == 0.0);
  CHECK(planeResidual(f.fineL) == 0.0);
  CHECK(planeResidual(f.fineR) == 0.0);
  // junction points land on the T-line by symmetry
  CHECK(f.fineL.at(3, 0).x == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(f.splitL.at(3, 3).x == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("shared columns agree exactly after completion") {
  auto g = rng(101);
  for (int t = 0; t < 20; ++t) {
    TNetT1 n = randomT1(g);
    FrameT1 f = buildFrameT1(n);
    for (int j = 0; j <= 3; ++j) {
      CHECK((f.splitL.at(3, j) - f.splitR.at(0, j)).norm() < 1e-14);
      CHECK((f.fineL.at(3, j) - f.fineR.at(0, j)).norm() < 1e-14);
    }
  }
}

TEST_CASE("frame joins: C2 inside strips, C1-with-beta across hv-curves") {
  auto g = rng(102);
  for (int t = 0; t < 25; ++t) {
    TNetT1 n = randomT1(g);
    FrameT1 f = buildFrameT1(n);
    const double scale = 10.0;
    // vertical strips C2
    CHECK(c2Residual(f.left[0], {0, PatchEdge::Vmax}, f.left[1], {0, PatchEdge::Vmin}, 17,
                     scale) < 1e-13);
    CHECK(c2Residual(f.left[1], {0, PatchEdge::Vmax}, f.left[2], {0, PatchEdge::Vmin}, 17,
                     scale) < 1e-13);
    CHECK(c2Residual(f.right[0], {0, PatchEdge::Vmax}, f.right[1], {0, PatchEdge::Vmin}, 17,
                     scale) < 1e-13);
    // split and fine pairs C2 (completed junctions)
    CHECK(c2Residual(f.splitL, {0, PatchEdge::Umax}, f.splitR, {0, PatchEdge::Umin}, 17,
                     scale) < 1e-13);
    CHECK(c2Residual(f.fineL, {0, PatchEdge::Umax}, f.fineR, {0, PatchEdge::Umin}, 17,
                     scale) < 1e-13);
    // hv-curves C1 with beta 1/2, 2, 1, 1
    CHECK(cBetaResidual(f.left[0], {0, PatchEdge::Umax}, f.splitL, {0, PatchEdge::Umin}, 0.5,
                        17, scale) < 1e-13);
    CHECK(cBetaResidual(f.splitR, {0, PatchEdge::Umax}, f.right[0], {0, PatchEdge::Umin}, 2.0,
                        17, scale) < 1e-13);
    CHECK(cBetaResidual(f.left[2], {0, PatchEdge::Umax}, f.fineL, {0, PatchEdge::Umin}, 1.0,
                        17, scale) < 1e-13);
    CHECK(cBetaResidual(f.fineR, {0, PatchEdge::Umax}, f.right[2], {0, PatchEdge::Umin}, 1.0,
                        17, scale) < 1e-13);
  }
}

TEST_CASE("hv-curve is C1 but not C2 (documents the drop)") {
  auto g = rng(103);
  TNetT1 n = randomT1(g);
  FrameT1 f = buildFrameT1(n);
  const double c2 = c2Residual(f.left[2], {0, PatchEdge::Umax}, f.fineL,
                               {0, PatchEdge::Umin}, 17, 10.0);
  CHECK(c2 > 1e-6);  // generic net: second derivatives differ
}

TEST_CASE("frame outer boundary equals the tensor border exactly") {
  auto g = rng(104);
  TNetT1 n = randomT1(g);
  FrameT1 f = buildFrameT1(n);
  TensorBorder tb = tensorBorderT1(n);
  auto rowsMatch = [](const BorderStrip::CellRows& cr, const BBPatch& p, PatchEdge e) {
    for (int k = 0; k < 3; ++k) {
      Curve got;
      switch (e) {
        case PatchEdge::Vmin: got = p.row(k); break;
        case PatchEdge::Vmax: got = p.row(p.dv - k); break;
        case PatchEdge::Umin: got = p.column(k); break;
        case PatchEdge::Umax: got = p.column(p.du - k); break;
      }
      for (size_t i = 0; i < got.size(); ++i)
        if ((got[i] - cr.rows[k][i]).norm() > 1e-14) return false;
    }
    return true;
  };
  CHECK(rowsMatch(tb.side[0].cells[0], f.left[0], PatchEdge::Vmin));
  CHECK(rowsMatch(tb.side[0].cells[2], f.right[0], PatchEdge::Vmin));
  for (int k = 0; k < 3; ++k)
    CHECK(rowsMatch(tb.side[3].cells[k], f.left[k], PatchEdge::Umin));
  for (int k = 0; k < 3; ++k)
    CHECK(rowsMatch(tb.side[1].cells[k], f.right[k], PatchEdge::Umax));
  CHECK(rowsMatch(tb.side[2].cells[1], f.fineL, PatchEdge::Vmax));
  CHECK(rowsMatch(tb.side[2].cells[2], f.fineR, PatchEdge::Vmax));
}

TEST_CASE("split halves of the bottom cell match the subdivided border strip") {
  auto g = rng(105);
  TNetT1 n = randomT1(g);
  FrameT1 f = buildFrameT1(n);
  TensorBorder tb = tensorBorderT1(n);
  const Curve& outer = tb.side[0].cells[1].rows[0];
  auto [lo, hi] = subdivideCurve(outer, 0.5);
  for (int i = 0; i <= 3; ++i) {
    CHECK((f.splitL.at(i, 0) - lo[i]).norm() < 1e-14);
    CHECK((f.splitR.at(i, 0) - hi[i]).norm() < 1e-14);
  }
}

TEST_CASE("affine equivariance of the frame") {
  auto g = rng(106);
  for (int t = 0; t < 10; ++t) {
    TNetT1 n = randomT1(g);
    AffineMap A = randomAffine(g);
    TNetT1 m = n;
    m.transform([&](const Vec3& p) { return A.apply(p); });
    FrameT1 fa = buildFrameT1(m);
    FrameT1 fb = buildFrameT1(n);
    auto checkPatch = [&](const BBPatch& pa, const BBPatch& pb) {
      for (size_t i = 0; i < pa.coeffs.size(); ++i)
        CHECK((pa.coeffs[i] - A.apply(pb.coeffs[i])).norm() < 2e-12 * 10);
    };
    checkPatch(fa.splitL, fb.splitL);
    checkPatch(fa.fineR, fb.fineR);
    checkPatch(fa.left[1], fb.left[1]);
  }
}

TEST_CASE("mirror symmetry: frame of mirrored net is the mirrored frame") {
  auto g = rng(107);
  TNetT1 n = randomT1(g);
  FrameT1 f = buildFrameT1(n);
  FrameT1 fm = buildFrameT1(n.mirroredX());
  FrameT1 ref = f.mirroredX();
  auto worst = [](const BBPatch& a, const BBPatch& b) {
    double w = 0;
    for (size_t i = 0; i < a.coeffs.size(); ++i)
      w = std::max(w, (a.coeffs[i] - b.coeffs[i]).norm());
    return w;
  };
  CHECK(worst(fm.splitL, ref.splitL) < 1e-13);
  CHECK(worst(fm.fineL, ref.fineL) < 1e-13);
  CHECK(worst(fm.left[0], ref.left[0]) < 1e-13);
  CHECK(worst(fm.right[2], ref.right[2]) < 1e-13);
}

TEST_CASE("junction point is the average of the two one-sided candidates") {
  auto g = rng(108);
  TNetT1 n = randomT1(g);
  const ControlGrid L = t1LeftNet(n), R = t1RightNet(n);
  const BBPatch bottomL = convertCell(L, 2, 1);
  const BBPatch bottomR = convertCell(R, 2, 1);
  const Curve rowL = subdivideCurve(bottomL.row(3), 0.5).first;
  const Curve rowR = subdivideCurve(bottomR.row(3), 0.5).second;
  FrameT1 f = buildFrameT1(n);
  CHECK((f.splitL.at(3, 3) - (rowL[3] + rowR[0]) * 0.5).norm() < 1e-14);
}
