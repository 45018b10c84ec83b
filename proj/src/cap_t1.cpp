#include "gts/cap.hpp"

#include <cassert>
#include <stdexcept>

namespace gts {

ReparamT1 reparamTableT1() {
  ReparamT1 t;
  t.left.a = {1.0, 0.5};
  t.left.b = {0.0};
  t.top.a = {1.0};
  t.top.b = {0.0, 0.5, 0.0};  // (1-u)u
  t.bottom.a = {1.0};
  t.bottom.b = {0.0, -0.25, 0.0};  // -(1-u)u/2
  return t;
}

ReparamT3 reparamTableT3() {
  ReparamT3 t;
  t.left.a = {1.0, 2.0 / 3.0};
  t.left.b = {0.0};
  t.topLeft.a = {1.0};
  t.topLeft.b = {0.0, 0.25, 0.0};  // (1-u)u/2
  t.bottomLeft.a = {1.0};
  t.bottomLeft.b = {0.0, -1.0 / 6.0, 0.0};  // -(1-u)u/3
  t.topRight = t.topLeft;
  t.topRight.b = {0.0, -0.25, 0.0};
  t.bottomRight = t.bottomLeft;
  t.bottomRight.b = {0.0, 1.0 / 6.0, 0.0};
  return t;
}

ReparamT2 reparamTableT2() {
  ReparamT2 t;
  t.topLeft.a = {1.0, 0.75};
  t.topLeft.b = {0.0, 0.25, 0.0};
  t.topRight.a = {0.75, 0.5};
  t.topRight.b = {0.0, -0.25, 0.0};
  t.bottomLeft.a = {1.0, 0.75};
  t.bottomLeft.b = {0.0, -0.125, 0.0};
  t.bottomRight.a = {0.75, 0.5};
  t.bottomRight.b = {0.0, 0.125, 0.0};
  return t;
}

G1Border g1BoundaryData(const Jet& jet, const Reparameterization& rho) {
  if (jet.order < 1) throw std::invalid_argument("g1BoundaryData: need order >= 1 jet");
  const Curve& P = jet.curves[0];
  const Curve& D = jet.curves[1];
  G1Border out;
  out.pos = raiseCurve(P, 4);
  Curve aD = mulScalarCurve(rho.a, D);
  if (aD.size() > 5) throw std::logic_error("g1BoundaryData: degree overflow in a*D");
  Curve cross = raiseCurve(aD, 4);
  if (rho.b.size() > 1 || rho.b[0] != 0.0) {
    Curve bT = mulScalarCurve(rho.b, derivCurve(P));
    if (bT.size() > 5) throw std::logic_error("g1BoundaryData: degree overflow in b*P'");
    cross = addCurves(cross, raiseCurve(bT, 4));
  }
  out.cross = cross;
  return out;
}

namespace {

// Builds the left bi-4 cap patch of a T1 frame in canonical orientation:
// u from the frame's left column toward the T-line, v from the split-cell
// side up to the fine-cell side.
BBPatch buildPlT1(const FrameT1& f) {
  const BBPatch& left1 = f.left[1];
  const BBPatch& below = f.splitL;
  const BBPatch& above = f.fineL;

  // Prolongation "1": shared column of left1 with the cap, cross derivative
  // reparameterized by a(v) = (1+v)/2 (the table's left entry with the
  // edge parameter starting at the refined side).
  Curve Pl = left1.column(3);
  Curve D1(4);
  for (int j = 0; j < 4; ++j) D1[j] = (left1.at(3, j) - left1.at(2, j)) * 3.0;
  Curve Xl = mulScalarCurve(ScalarPoly{0.5, 1.0}, D1);

  // Split-cell side: shear +(1-u)u.
  Curve Pb = below.row(3);
  Curve Dt(4);
  for (int i = 0; i < 4; ++i) Dt[i] = (below.at(i, 3) - below.at(i, 2)) * 3.0;
  Curve Xb = addCurves(raiseCurve(Dt, 4),
                       mulScalarCurve(ScalarPoly{0.0, 0.5, 0.0}, derivCurve(Pb)));

  // Fine-cell side: shear +(1-u)u/2 in the upward orientation.
  Curve Pt = above.row(0);
  Curve Db(4);
  for (int i = 0; i < 4; ++i) Db[i] = (above.at(i, 1) - above.at(i, 0)) * 3.0;
  Curve Xt = addCurves(raiseCurve(Db, 4),
                       mulScalarCurve(ScalarPoly{0.0, 0.25, 0.0}, derivCurve(Pt)));

  BBPatch p(4, 4);
  const Curve col0 = raiseCurve(Pl, 4);
  Curve col1(5);
  for (int j = 0; j <= 4; ++j) col1[j] = col0[j] + Xl[j] * 0.25;
  p.setColumn(0, col0);
  p.setColumn(1, col1);

  const Curve Pb4 = raiseCurve(Pb, 4);
  const Curve Pt4 = raiseCurve(Pt, 4);
  for (int i = 2; i <= 4; ++i) {
    p.at(i, 0) = Pb4[i];
    p.at(i, 1) = Pb4[i] + Xb[i] * 0.25;
    p.at(i, 4) = Pt4[i];
    p.at(i, 3) = Pt4[i] - Xt[i] * 0.25;
    // interior: the column is a degree-raised cubic
    p.at(i, 2) = (p.at(i, 1) * 4.0 + p.at(i, 3) * 4.0 - p.at(i, 0) - p.at(i, 4)) / 6.0;
  }
  return p;
}

}  // namespace

CapT1 buildCapT1(const FrameT1& frame) {
  CapT1 cap;
  cap.pl = buildPlT1(frame);
  cap.pr = buildPlT1(frame.mirroredX()).mirroredU();
  return cap;
}

GTSurface assembleT1(const TNetT1& net) {
  const FrameT1 f = buildFrameT1(net);
  const CapT1 cap = buildCapT1(f);

  GTSurface s;
  const std::string prov = "t1";
  int left[3], right[3];
  for (int k = 0; k < 3; ++k) {
    left[k] = s.addPatch("frame/left" + std::to_string(k), f.left[k], prov);
    right[k] = s.addPatch("frame/right" + std::to_string(k), f.right[k], prov);
  }
  const int splitL = s.addPatch("frame/splitL", f.splitL, prov);
  const int splitR = s.addPatch("frame/splitR", f.splitR, prov);
  const int fineL = s.addPatch("frame/fineL", f.fineL, prov);
  const int fineR = s.addPatch("frame/fineR", f.fineR, prov);
  const int pl = s.addPatch("cap/pl", cap.pl, prov);
  const int pr = s.addPatch("cap/pr", cap.pr, prov);

  auto c2 = [&](int a, PatchEdge ea, int b, PatchEdge eb) {
    s.joins.push_back({{a, ea, false}, {b, eb, false}, JoinClass::C2, 1.0, {}});
  };
  auto c1b = [&](int a, PatchEdge ea, int b, PatchEdge eb, double beta) {
    s.joins.push_back({{a, ea, false}, {b, eb, false}, JoinClass::C1Beta, beta, {}});
  };
  auto g1 = [&](int a, PatchEdge ea, int b, PatchEdge eb, ScalarPoly av, ScalarPoly bv) {
    Join j{{a, ea, false}, {b, eb, false}, JoinClass::G1Rho, 1.0, {std::move(av), std::move(bv)}};
    s.joins.push_back(std::move(j));
  };

  // frame columns
  c2(left[0], PatchEdge::Vmax, left[1], PatchEdge::Vmin);
  c2(left[1], PatchEdge::Vmax, left[2], PatchEdge::Vmin);
  c2(right[0], PatchEdge::Vmax, right[1], PatchEdge::Vmin);
  c2(right[1], PatchEdge::Vmax, right[2], PatchEdge::Vmin);
  // split pair and fine pair
  c2(splitL, PatchEdge::Umax, splitR, PatchEdge::Umin);
  c2(fineL, PatchEdge::Umax, fineR, PatchEdge::Umin);
  // hv-curves
  c1b(left[0], PatchEdge::Umax, splitL, PatchEdge::Umin, 0.5);
  c1b(splitR, PatchEdge::Umax, right[0], PatchEdge::Umin, 2.0);
  c1b(left[2], PatchEdge::Umax, fineL, PatchEdge::Umin, 1.0);
  c1b(fineR, PatchEdge::Umax, right[2], PatchEdge::Umin, 1.0);
  // cap to frame, travel from frame into cap
  g1(left[1], PatchEdge::Umax, pl, PatchEdge::Umin, {0.5, 1.0}, {0.0});
  g1(splitL, PatchEdge::Vmax, pl, PatchEdge::Vmin, {1.0}, {0.0, 0.5, 0.0});
  g1(fineL, PatchEdge::Vmin, pl, PatchEdge::Vmax, {1.0}, {0.0, -0.25, 0.0});
  g1(right[1], PatchEdge::Umin, pr, PatchEdge::Umax, {0.5, 1.0}, {0.0});
  g1(splitR, PatchEdge::Vmax, pr, PatchEdge::Vmin, {1.0}, {0.0, -0.5, 0.0});
  g1(fineR, PatchEdge::Vmin, pr, PatchEdge::Vmax, {1.0}, {0.0, 0.25, 0.0});
  // cap internal
  s.joins.push_back(
      {{pl, PatchEdge::Umax, false}, {pr, PatchEdge::Umin, false}, JoinClass::CapInternalC1, 1.0, {}});

  return s;
}

}  // namespace gts
