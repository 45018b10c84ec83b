#include "gts/cap.hpp"

#include <cassert>

namespace gts {

namespace {

// One bi-4 cap piece of a T3 net with shears sigma*u(1-u) in the piece's
// own parameter. The sigmas alternate in sign from piece to piece, which
// keeps the cross field C1-with-beta across the junctions while the shear
// itself vanishes there.
BBPatch buildPieceT3(const BBPatch& below, const BBPatch& above, double sigmaBelow,
                     double sigmaAbove, const BBPatch* leftFrame) {
  const ScalarPoly shearBelow{0.0, sigmaBelow / 2.0, 0.0};
  const ScalarPoly shearAbove{0.0, sigmaAbove / 2.0, 0.0};
  Curve Pb = below.row(3);
  Curve Dt(4);
  for (int i = 0; i < 4; ++i) Dt[i] = (below.at(i, 3) - below.at(i, 2)) * 3.0;
  Curve Xb = addCurves(raiseCurve(Dt, 4), mulScalarCurve(shearBelow, derivCurve(Pb)));

  Curve Pt = above.row(0);
  Curve Db(4);
  for (int i = 0; i < 4; ++i) Db[i] = (above.at(i, 1) - above.at(i, 0)) * 3.0;
  Curve Xt = addCurves(raiseCurve(Db, 4), mulScalarCurve(shearAbove, derivCurve(Pt)));

  BBPatch p(4, 4);
  const Curve Pb4 = raiseCurve(Pb, 4);
  const Curve Pt4 = raiseCurve(Pt, 4);
  int iStart = 0;
  if (leftFrame) {
    Curve Pl = leftFrame->column(3);
    Curve D1(4);
    for (int j = 0; j < 4; ++j) D1[j] = (leftFrame->at(3, j) - leftFrame->at(2, j)) * 3.0;
    Curve Xl = mulScalarCurve(ScalarPoly{2.0 / 3.0, 1.0}, D1);
    const Curve col0 = raiseCurve(Pl, 4);
    Curve col1(5);
    for (int j = 0; j <= 4; ++j) col1[j] = col0[j] + Xl[j] * 0.25;
    p.setColumn(0, col0);
    p.setColumn(1, col1);
    iStart = 2;
  }
  for (int i = iStart; i <= 4; ++i) {
    p.at(i, 0) = Pb4[i];
    p.at(i, 1) = Pb4[i] + Xb[i] * 0.25;
    p.at(i, 4) = Pt4[i];
    p.at(i, 3) = Pt4[i] - Xt[i] * 0.25;
    p.at(i, 2) = (p.at(i, 1) * 4.0 + p.at(i, 3) * 4.0 - p.at(i, 0) - p.at(i, 4)) / 6.0;
  }
  return p;
}

}  // namespace

CapT3 buildCapT3(const FrameT3& frame) {
  CapT3 cap;
  cap.p[0] = buildPieceT3(frame.bottom[0], frame.top[0], 0.5, 1.0 / 3.0, &frame.left[1]);
  cap.p[1] = buildPieceT3(frame.bottom[1], frame.top[1], -0.5, -1.0 / 3.0, nullptr);
  const FrameT3 m = frame.mirroredX();
  cap.p[3] = buildPieceT3(m.bottom[0], m.top[0], 0.5, 1.0 / 3.0, &m.left[1]).mirroredU();
  cap.p[2] = buildPieceT3(m.bottom[1], m.top[1], -0.5, -1.0 / 3.0, nullptr).mirroredU();
  return cap;
}

GTSurface assembleT3(const TNetT3& net) {
  const FrameT3 f = buildFrameT3(net);
  const CapT3 cap = buildCapT3(f);

  GTSurface s;
  const std::string prov = "t3";
  int left[3], right[3], bottom[4], top[4], capId[4];
  for (int k = 0; k < 3; ++k) {
    left[k] = s.addPatch("frame/left" + std::to_string(k), f.left[k], prov);
    right[k] = s.addPatch("frame/right" + std::to_string(k), f.right[k], prov);
  }
  for (int k = 0; k < 4; ++k) {
    bottom[k] = s.addPatch("frame/bottom" + std::to_string(k), f.bottom[k], prov);
    top[k] = s.addPatch("frame/top" + std::to_string(k), f.top[k], prov);
    capId[k] = s.addPatch("cap/p" + std::to_string(k), cap.p[k], prov);
  }

  auto c2 = [&](int a, PatchEdge ea, int b, PatchEdge eb) {
    s.joins.push_back({{a, ea, false}, {b, eb, false}, JoinClass::C2, 1.0, {}});
  };
  auto c1b = [&](int a, PatchEdge ea, int b, PatchEdge eb, double beta) {
    s.joins.push_back({{a, ea, false}, {b, eb, false}, JoinClass::C1Beta, beta, {}});
  };
  auto g1 = [&](int a, PatchEdge ea, int b, PatchEdge eb, ScalarPoly av, ScalarPoly bv) {
    s.joins.push_back(
        {{a, ea, false}, {b, eb, false}, JoinClass::G1Rho, 1.0, {std::move(av), std::move(bv)}});
  };
  auto capC1 = [&](int a, int b, double beta) {
    s.joins.push_back({{a, PatchEdge::Umax, false},
                       {b, PatchEdge::Umin, false},
                       JoinClass::CapInternalC1,
                       beta,
                       {}});
  };

  for (int k = 0; k < 2; ++k) {
    c2(left[k], PatchEdge::Vmax, left[k + 1], PatchEdge::Vmin);
    c2(right[k], PatchEdge::Vmax, right[k + 1], PatchEdge::Vmin);
  }
  c1b(left[0], PatchEdge::Umax, bottom[0], PatchEdge::Umin, 2.0 / 3.0);
  c1b(bottom[0], PatchEdge::Umax, bottom[1], PatchEdge::Umin, 0.5);
  c2(bottom[1], PatchEdge::Umax, bottom[2], PatchEdge::Umin);
  c1b(bottom[2], PatchEdge::Umax, bottom[3], PatchEdge::Umin, 2.0);
  c1b(bottom[3], PatchEdge::Umax, right[0], PatchEdge::Umin, 1.5);
  c2(left[2], PatchEdge::Umax, top[0], PatchEdge::Umin);
  c1b(top[0], PatchEdge::Umax, top[1], PatchEdge::Umin, 0.5);
  c2(top[1], PatchEdge::Umax, top[2], PatchEdge::Umin);
  c1b(top[2], PatchEdge::Umax, top[3], PatchEdge::Umin, 2.0);
  c2(top[3], PatchEdge::Umax, right[2], PatchEdge::Umin);

  g1(left[1], PatchEdge::Umax, capId[0], PatchEdge::Umin, {2.0 / 3.0, 1.0}, {0.0});
  g1(right[1], PatchEdge::Umin, capId[3], PatchEdge::Umax, {2.0 / 3.0, 1.0}, {0.0});

  // travel form: bottoms carry their construction shear, tops the negated
  // one; the right half mirrors (negating and reversing, symmetric here)
  const double sb[4] = {0.5, -0.5, 0.5, -0.5};
  const double st[4] = {1.0 / 3.0, -1.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0};
  for (int k = 0; k < 4; ++k) {
    g1(bottom[k], PatchEdge::Vmax, capId[k], PatchEdge::Vmin, {1.0}, {0.0, sb[k] / 2.0, 0.0});
    g1(top[k], PatchEdge::Vmin, capId[k], PatchEdge::Vmax, {1.0}, {0.0, -st[k] / 2.0, 0.0});
  }

  capC1(capId[0], capId[1], 0.5);
  capC1(capId[1], capId[2], 1.0);
  capC1(capId[2], capId[3], 2.0);

  return s;
}

}  // namespace gts
