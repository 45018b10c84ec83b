#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gts/geometry.hpp"

namespace gts {

// Univariate curves and scalar polynomials in Bernstein-Bezier form.
// The coefficient count is degree+1.
using Curve = std::vector<Vec3>;
using ScalarPoly = std::vector<double>;

double binomial(int n, int k);

Vec3 evalCurve(const Curve& c, double t);
double evalScalar(const ScalarPoly& p, double t);

// Hodograph: degree drops by one, coefficients d*(c[i+1]-c[i]).
Curve derivCurve(const Curve& c);
ScalarPoly derivScalar(const ScalarPoly& p);

Curve raiseCurve(const Curve& c, int newDegree);
ScalarPoly raiseScalar(const ScalarPoly& p, int newDegree);

std::pair<Curve, Curve> subdivideCurve(const Curve& c, double t);

// Product of BB-form polynomials; result degree is the sum of degrees.
ScalarPoly mulScalar(const ScalarPoly& a, const ScalarPoly& b);
Curve mulScalarCurve(const ScalarPoly& a, const Curve& c);

Curve addCurves(const Curve& a, const Curve& b);
Curve scaleCurve(const Curve& c, double s);

// Smallest degree whose least-squares degree reduction leaves a residual
// below tol (absolute, caller pre-scales by the data's bounding box).
int trueDegree(const Curve& c, double tol);

struct BBPatch {
  int du = 0, dv = 0;
  std::vector<Vec3> coeffs;  // (du+1) x (dv+1), index i*(dv+1)+j

  BBPatch() = default;
  BBPatch(int degreeU, int degreeV)
      : du(degreeU), dv(degreeV),
        coeffs(static_cast<size_t>(degreeU + 1) * (degreeV + 1)) {}

  Vec3& at(int i, int j) { return coeffs[static_cast<size_t>(i) * (dv + 1) + j]; }
  const Vec3& at(int i, int j) const {
    return coeffs[static_cast<size_t>(i) * (dv + 1) + j];
  }

  Curve column(int i) const;        // fixed u-index, runs in v
  Curve row(int j) const;           // fixed v-index, runs in u
  void setColumn(int i, const Curve& c);
  void setRow(int j, const Curve& c);

  bool finite() const;
  double bbox() const { return bboxDiagonal(coeffs); }

  // Mirror in u (i -> du-i); mirrors geometry across the patch's u-axis.
  BBPatch mirroredU() const;
};

enum class Direction : uint8_t { U, V };
enum class PatchEdge : uint8_t { Umin, Umax, Vmin, Vmax };

Vec3 evalPatch(const BBPatch& p, double u, double v);
Vec3 partialDeriv(const BBPatch& p, double u, double v, Direction dir, int order);
BBPatch degreeRaise(const BBPatch& p, int newDu, int newDv);
std::pair<BBPatch, BBPatch> subdivide(const BBPatch& p, Direction dir, double t);

// Boundary jet along one edge: curves of the k-th transversal derivative,
// k = 0..order, each parameterized by the edge's own parameter
// (u for Vmin/Vmax, v for Umin/Umax). Derivatives are taken in the patch's
// own coordinates, pointing in +u / +v regardless of edge.
struct Jet {
  int order = 0;
  PatchEdge edge = PatchEdge::Vmin;
  std::vector<Curve> curves;  // order+1 entries
};

Jet extractJet(const BBPatch& p, PatchEdge edge, int order);

// Rebuilds the two (or three) coefficient rows adjacent to the edge from a
// jet; inverse of extractJet on those rows.
void applyJet(BBPatch& p, const Jet& jet);

}  // namespace gts
