#pragma once

#include <string>
#include <vector>

#include "gts/surface.hpp"

namespace gts {

// Jets of a join side in the join's common parameterization: position,
// first and (if requested) second derivative in the travel direction
// (from -> across the edge -> to).
struct OrientedJet {
  Curve pos, d1, d2;
};
OrientedJet orientedJet(const BBPatch& p, const EdgeRef& e, bool isFrom, int order);

// Max sampled residual of the G1 condition D_to - a*D_from - b*T' along
// the shared edge, normalized by `scale` (0 disables normalization).
// Returns the position (C0) mismatch separately.
struct G1Check {
  double c0 = 0.0;
  double g1 = 0.0;
};
G1Check g1Residual(const BBPatch& from, const EdgeRef& fe, const BBPatch& to,
                   const EdgeRef& te, const Reparameterization& rho, int samples,
                   double scale);

double cBetaResidual(const BBPatch& from, const EdgeRef& fe, const BBPatch& to,
                     const EdgeRef& te, double beta, int samples, double scale);

double c2Residual(const BBPatch& from, const EdgeRef& fe, const BBPatch& to,
                  const EdgeRef& te, int samples, double scale);

// Coefficient-level residual of the polynomial identity
// D_to = a*D_from + b*T' (max BB coefficient deviation, normalized).
double g1CoefficientResidual(const BBPatch& from, const EdgeRef& fe, const BBPatch& to,
                             const EdgeRef& te, const Reparameterization& rho,
                             double scale);

struct EdgeReport {
  int joinIndex = -1;
  std::string a, b;       // patch names
  JoinClass declared;
  double c0 = 0.0;        // position mismatch
  double residual = 0.0;  // residual of the declared class
  double c2residual = 0.0;
  bool pass = false;
};

struct ContinuityReport {
  std::vector<EdgeReport> edges;
  bool pass = true;
  double worst = 0.0;
};

struct AuditTolerances {
  double c0 = 1e-10;
  double g1 = 1e-10;
  double c1 = 1e-12;
  double c2 = 1e-12;
  int samples = 33;
};

ContinuityReport auditSurface(const GTSurface& s, const AuditTolerances& tol = {});

std::string formatReport(const ContinuityReport& r);

}  // namespace gts
