#include "gts/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gts {

namespace {

Curve reversed(Curve c) {
  std::reverse(c.begin(), c.end());
  return c;
}

}  // namespace

OrientedJet orientedJet(const BBPatch& p, const EdgeRef& e, bool isFrom, int order) {
  Jet j = extractJet(p, e.edge, order);
  // Travel direction: out of `from`, into `to`. Edge-min sides have the
  // patch's own derivative pointing inward, edge-max sides outward.
  const bool maxSide = (e.edge == PatchEdge::Vmax || e.edge == PatchEdge::Umax);
  const double sgn = (isFrom == maxSide) ? 1.0 : -1.0;

  OrientedJet out;
  out.pos = j.curves[0];
  if (order >= 1) out.d1 = scaleCurve(j.curves[1], sgn);
  if (order >= 2) out.d2 = j.curves[2];  // second derivative is sign-invariant
  if (e.reversed) {
    out.pos = reversed(out.pos);
    if (order >= 1) out.d1 = reversed(out.d1);
    if (order >= 2) out.d2 = reversed(out.d2);
  }
  return out;
}

G1Check g1Residual(const BBPatch& from, const EdgeRef& fe, const BBPatch& to,
                   const EdgeRef& te, const Reparameterization& rho, int samples,
                   double scale) {
  OrientedJet jf = orientedJet(from, fe, true, 1);
  OrientedJet jt = orientedJet(to, te, false, 1);
  const double inv = scale > 0.0 ? 1.0 / scale : 1.0;
  G1Check r;
  Curve tangent = derivCurve(jf.pos);
  for (int s = 0; s < samples; ++s) {
    const double u = samples == 1 ? 0.5 : double(s) / (samples - 1);
    r.c0 = std::max(r.c0, (evalCurve(jf.pos, u) - evalCurve(jt.pos, u)).norm() * inv);
    const Vec3 resid = evalCurve(jt.d1, u) - evalCurve(jf.d1, u) * evalScalar(rho.a, u) -
                       evalCurve(tangent, u) * evalScalar(rho.b, u);
    r.g1 = std::max(r.g1, resid.norm() * inv);
  }
  return r;
}

double g1CoefficientResidual(const BBPatch& from, const EdgeRef& fe, const BBPatch& to,
                             const EdgeRef& te, const Reparameterization& rho,
                             double scale) {
  OrientedJet jf = orientedJet(from, fe, true, 1);
  OrientedJet jt = orientedJet(to, te, false, 1);
  Curve rhs = mulScalarCurve(rho.a, jf.d1);
  Curve bT = mulScalarCurve(rho.b, derivCurve(jf.pos));
  const int deg = static_cast<int>(std::max(
      {rhs.size(), bT.size(), jt.d1.size()})) - 1;
  rhs = raiseCurve(rhs, deg);
  bT = raiseCurve(bT, deg);
  Curve lhs = raiseCurve(jt.d1, deg);
  const double inv = scale > 0.0 ? 1.0 / scale : 1.0;
  double worst = 0.0;
  for (int k = 0; k <= deg; ++k)
    worst = std::max(worst, (lhs[k] - rhs[k] - bT[k]).norm() * inv);
  return worst;
}

double cBetaResidual(const BBPatch& from, const EdgeRef& fe, const BBPatch& to,
                     const EdgeRef& te, double beta, int samples, double scale) {
  OrientedJet jf = orientedJet(from, fe, true, 1);
  OrientedJet jt = orientedJet(to, te, false, 1);
  const double inv = scale > 0.0 ? 1.0 / scale : 1.0;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double u = samples == 1 ? 0.5 : double(s) / (samples - 1);
    worst = std::max(worst,
                     (evalCurve(jt.d1, u) - evalCurve(jf.d1, u) * beta).norm() * inv);
  }
  return worst;
}

double c2Residual(const BBPatch& from, const EdgeRef& fe, const BBPatch& to,
                  const EdgeRef& te, int samples, double scale) {
  OrientedJet jf = orientedJet(from, fe, true, 2);
  OrientedJet jt = orientedJet(to, te, false, 2);
  const double inv = scale > 0.0 ? 1.0 / scale : 1.0;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double u = samples == 1 ? 0.5 : double(s) / (samples - 1);
    worst = std::max(worst, (evalCurve(jt.d1, u) - evalCurve(jf.d1, u)).norm() * inv);
    worst = std::max(worst, (evalCurve(jt.d2, u) - evalCurve(jf.d2, u)).norm() * inv);
  }
  return worst;
}

ContinuityReport auditSurface(const GTSurface& s, const AuditTolerances& tol) {
  ContinuityReport rep;
  const double scale = s.bbox();
  const double inv = scale > 0.0 ? scale : 1.0;
  for (size_t k = 0; k < s.joins.size(); ++k) {
    const Join& j = s.joins[k];
    const BBPatch& pf = s.patches[j.from.patch];
    const BBPatch& pt = s.patches[j.to.patch];
    EdgeReport er;
    er.joinIndex = static_cast<int>(k);
    er.a = s.names[j.from.patch];
    er.b = s.names[j.to.patch];
    er.declared = j.cls;

    // C0 always
    OrientedJet jf = orientedJet(pf, j.from, true, 0);
    OrientedJet jt = orientedJet(pt, j.to, false, 0);
    for (int q = 0; q <= 32; ++q) {
      const double u = q / 32.0;
      er.c0 = std::max(er.c0, (evalCurve(jf.pos, u) - evalCurve(jt.pos, u)).norm() / inv);
    }

    switch (j.cls) {
      case JoinClass::C2:
        er.residual = c2Residual(pf, j.from, pt, j.to, tol.samples, inv);
        er.pass = er.c0 <= tol.c0 && er.residual <= tol.c2;
        break;
      case JoinClass::C1Beta:
      case JoinClass::CapInternalC1:
        er.residual = cBetaResidual(pf, j.from, pt, j.to, j.beta, tol.samples, inv);
        er.c2residual = c2Residual(pf, j.from, pt, j.to, tol.samples, inv);
        er.pass = er.c0 <= tol.c0 && er.residual <= tol.c1;
        break;
      case JoinClass::CapInternalC2:
        er.residual = c2Residual(pf, j.from, pt, j.to, tol.samples, inv);
        er.pass = er.c0 <= tol.c0 && er.residual <= tol.c2;
        break;
      case JoinClass::G1Rho: {
        G1Check g = g1Residual(pf, j.from, pt, j.to, j.rho, tol.samples, inv);
        er.residual = g.g1;
        er.pass = er.c0 <= tol.c0 && g.g1 <= tol.g1;
        break;
      }
    }
    rep.worst = std::max(rep.worst, std::max(er.residual, er.c0));
    rep.pass = rep.pass && er.pass;
    rep.edges.push_back(std::move(er));
  }
  return rep;
}

std::string formatReport(const ContinuityReport& r) {
  std::ostringstream os;
  auto clsName = [](JoinClass c) {
    switch (c) {
      case JoinClass::C2: return "C2";
      case JoinClass::C1Beta: return "C1b";
      case JoinClass::G1Rho: return "G1";
      case JoinClass::CapInternalC1: return "capC1";
      case JoinClass::CapInternalC2: return "capC2";
    }
    return "?";
  };
  for (const auto& e : r.edges) {
    os << "edge " << e.a << " | " << e.b << " class=" << clsName(e.declared)
       << " c0=" << e.c0 << " residual=" << e.residual
       << (e.pass ? " pass" : " FAIL") << "\n";
  }
  os << (r.pass ? "AUDIT PASS" : "AUDIT FAIL") << " worst=" << r.worst << "\n";
  return os.str();
}

}  // namespace gts
