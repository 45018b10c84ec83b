#include "gts/bezier.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cassert>
#include <cmath>

namespace gts {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

template <class T>
T deCasteljau(std::vector<T> tmp, double t) {
  const double s = 1.0 - t;
  for (size_t len = tmp.size(); len > 1; --len)
    for (size_t i = 0; i + 1 < len; ++i) tmp[i] = tmp[i] * s + tmp[i + 1] * t;
  return tmp[0];
}

double lerpd(double a, double b, double t) { return a * (1.0 - t) + b * t; }

}  // namespace

Vec3 evalCurve(const Curve& c, double t) {
  assert(!c.empty());
  return deCasteljau(c, t);
}

double evalScalar(const ScalarPoly& p, double t) {
  assert(!p.empty());
  std::vector<double> tmp = p;
  for (size_t len = tmp.size(); len > 1; --len)
    for (size_t i = 0; i + 1 < len; ++i) tmp[i] = lerpd(tmp[i], tmp[i + 1], t);
  return tmp[0];
}

Curve derivCurve(const Curve& c) {
  const int d = static_cast<int>(c.size()) - 1;
  if (d == 0) return {Vec3{}};
  Curve r(d);
  for (int i = 0; i < d; ++i) r[i] = (c[i + 1] - c[i]) * static_cast<double>(d);
  return r;
}

ScalarPoly derivScalar(const ScalarPoly& p) {
  const int d = static_cast<int>(p.size()) - 1;
  if (d == 0) return {0.0};
  ScalarPoly r(d);
  for (int i = 0; i < d; ++i) r[i] = (p[i + 1] - p[i]) * d;
  return r;
}

namespace {

template <class T>
std::vector<T> raiseOnce(const std::vector<T>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<T> r(c.size() + 1);
  r[0] = c[0];
  r[d + 1] = c[d];
  for (int i = 1; i <= d; ++i) {
    const double a = static_cast<double>(i) / (d + 1);
    r[i] = c[i - 1] * a + c[i] * (1.0 - a);
  }
  return r;
}

}  // namespace

Curve raiseCurve(const Curve& c, int newDegree) {
  assert(newDegree + 1 >= static_cast<int>(c.size()));
  Curve r = c;
  while (static_cast<int>(r.size()) <= newDegree) r = raiseOnce(r);
  return r;
}

ScalarPoly raiseScalar(const ScalarPoly& p, int newDegree) {
  assert(newDegree + 1 >= static_cast<int>(p.size()));
  ScalarPoly r = p;
  while (static_cast<int>(r.size()) <= newDegree) r = raiseOnce(r);
  return r;
}

std::pair<Curve, Curve> subdivideCurve(const Curve& c, double t) {
  const size_t n = c.size();
  Curve left(n), right(n), tmp = c;
  left[0] = tmp.front();
  right[n - 1] = tmp.back();
  for (size_t len = n; len > 1; --len) {
    for (size_t i = 0; i + 1 < len; ++i) tmp[i] = tmp[i] * (1.0 - t) + tmp[i + 1] * t;
    left[n - len + 1] = tmp[0];
    right[len - 2] = tmp[len - 2];
  }
  return {std::move(left), std::move(right)};
}

ScalarPoly mulScalar(const ScalarPoly& a, const ScalarPoly& b) {
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  ScalarPoly r(m + n + 1, 0.0);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      r[i + j] += binomial(m, i) * binomial(n, j) / binomial(m + n, i + j) * a[i] * b[j];
  return r;
}

Curve mulScalarCurve(const ScalarPoly& a, const Curve& c) {
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(c.size()) - 1;
  Curve r(m + n + 1);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      r[i + j] += c[j] * (binomial(m, i) * binomial(n, j) / binomial(m + n, i + j) * a[i]);
  return r;
}

Curve addCurves(const Curve& a, const Curve& b) {
  assert(a.size() == b.size());
  Curve r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Curve scaleCurve(const Curve& c, double s) {
  Curve r = c;
  for (auto& p : r) p *= s;
  return r;
}

int trueDegree(const Curve& c, double tol) {
  const int d = static_cast<int>(c.size()) - 1;
  int best = d;
  for (int dd = d - 1; dd >= 0; --dd) {
    // Least-squares fit of a degree-dd curve whose raise matches c.
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(d + 1, dd + 1);
    // Raising from dd to d: r_k = sum_i C(dd,i) C(d-dd,k-i) / C(d,k) * c_i.
    for (int k = 0; k <= d; ++k)
      for (int i = 0; i <= dd; ++i)
        R(k, i) = binomial(dd, i) * binomial(d - dd, k - i) / binomial(d, k);
    Eigen::MatrixXd B(d + 1, 3);
    for (int k = 0; k <= d; ++k) B.row(k) << c[k].x, c[k].y, c[k].z;
    Eigen::MatrixXd sol = R.colPivHouseholderQr().solve(B);
    const double resid = (R * sol - B).cwiseAbs().maxCoeff();
    if (resid <= tol)
      best = dd;
    else
      break;
  }
  return best;
}

Curve BBPatch::column(int i) const {
  Curve c(dv + 1);
  for (int j = 0; j <= dv; ++j) c[j] = at(i, j);
  return c;
}

Curve BBPatch::row(int j) const {
  Curve c(du + 1);
  for (int i = 0; i <= du; ++i) c[i] = at(i, j);
  return c;
}

void BBPatch::setColumn(int i, const Curve& c) {
  assert(static_cast<int>(c.size()) == dv + 1);
  for (int j = 0; j <= dv; ++j) at(i, j) = c[j];
}

void BBPatch::setRow(int j, const Curve& c) {
  assert(static_cast<int>(c.size()) == du + 1);
  for (int i = 0; i <= du; ++i) at(i, j) = c[i];
}

bool BBPatch::finite() const {
  for (const auto& p : coeffs)
    if (!p.finite()) return false;
  return true;
}

BBPatch BBPatch::mirroredU() const {
  BBPatch r(du, dv);
  for (int i = 0; i <= du; ++i)
    for (int j = 0; j <= dv; ++j) r.at(du - i, j) = at(i, j);
  return r;
}

Vec3 evalPatch(const BBPatch& p, double u, double v) {
  if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0)
    throw std::domain_error("evalPatch: parameter outside [0,1]");
  Curve uc(p.du + 1);
  for (int i = 0; i <= p.du; ++i) uc[i] = evalCurve(p.column(i), v);
  return evalCurve(uc, u);
}

Vec3 partialDeriv(const BBPatch& p, double u, double v, Direction dir, int order) {
  if (order < 1 || order > 2) throw std::domain_error("partialDeriv: order must be 1 or 2");
  const int deg = dir == Direction::U ? p.du : p.dv;
  if (order > deg) throw std::domain_error("partialDeriv: order exceeds degree");
  if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0)
    throw std::domain_error("partialDeriv: parameter outside [0,1]");

  if (dir == Direction::U) {
    Curve uc(p.du + 1);
    for (int i = 0; i <= p.du; ++i) uc[i] = evalCurve(p.column(i), v);
    for (int k = 0; k < order; ++k) uc = derivCurve(uc);
    return evalCurve(uc, u);
  }
  Curve vc(p.dv + 1);
  for (int j = 0; j <= p.dv; ++j) vc[j] = evalCurve(p.row(j), u);
  for (int k = 0; k < order; ++k) vc = derivCurve(vc);
  return evalCurve(vc, v);
}

BBPatch degreeRaise(const BBPatch& p, int newDu, int newDv) {
  if (newDu < p.du || newDv < p.dv)
    throw std::domain_error("degreeRaise: cannot lower degree");
  BBPatch tmp(newDu, p.dv);
  for (int j = 0; j <= p.dv; ++j) tmp.setRow(j, raiseCurve(p.row(j), newDu));
  BBPatch out(newDu, newDv);
  for (int i = 0; i <= newDu; ++i) out.setColumn(i, raiseCurve(tmp.column(i), newDv));
  return out;
}

std::pair<BBPatch, BBPatch> subdivide(const BBPatch& p, Direction dir, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("subdivide: t outside (0,1)");
  BBPatch a(p.du, p.dv), b(p.du, p.dv);
  if (dir == Direction::U) {
    for (int j = 0; j <= p.dv; ++j) {
      auto [l, r] = subdivideCurve(p.row(j), t);
      a.setRow(j, l);
      b.setRow(j, r);
    }
  } else {
    for (int i = 0; i <= p.du; ++i) {
      auto [l, r] = subdivideCurve(p.column(i), t);
      a.setColumn(i, l);
      b.setColumn(i, r);
    }
  }
  return {std::move(a), std::move(b)};
}

Jet extractJet(const BBPatch& p, PatchEdge edge, int order) {
  const bool vEdge = edge == PatchEdge::Vmin || edge == PatchEdge::Vmax;
  const int transDeg = vEdge ? p.dv : p.du;
  if (order < 0 || order > 2 || order > transDeg)
    throw std::domain_error("extractJet: order exceeds transversal degree");

  Jet jet;
  jet.order = order;
  jet.edge = edge;
  const int edgeCount = (vEdge ? p.du : p.dv) + 1;

  for (int k = 0; k <= order; ++k) {
    Curve c(edgeCount);
    for (int e = 0; e < edgeCount; ++e) {
      // Transversal curve through edge coefficient e: along v for a v-edge,
      // along u for a u-edge.
      Curve trans = vEdge ? p.column(e) : p.row(e);
      for (int kk = 0; kk < k; ++kk) trans = derivCurve(trans);
      const double t = (edge == PatchEdge::Vmin || edge == PatchEdge::Umin) ? 0.0 : 1.0;
      c[e] = evalCurve(trans, t);
    }
    jet.curves.push_back(std::move(c));
  }
  return jet;
}

void applyJet(BBPatch& p, const Jet& jet) {
  const bool vEdge = jet.edge == PatchEdge::Vmin || jet.edge == PatchEdge::Vmax;
  const int transDeg = vEdge ? p.dv : p.du;
  const bool minSide = jet.edge == PatchEdge::Vmin || jet.edge == PatchEdge::Umin;
  const int edgeCount = (vEdge ? p.du : p.dv) + 1;
  assert(static_cast<int>(jet.curves[0].size()) == edgeCount);

  // Successive rows from derivative data: r0 = c0, r1 = r0 + c1/d,
  // r2 = c2/(d(d-1)) + 2 r1 - r0 (with signs flipped on max edges).
  auto rowIndex = [&](int k) { return minSide ? k : transDeg - k; };
  const double sgn = minSide ? 1.0 : -1.0;
  std::vector<Curve> rows(jet.order + 1);
  rows[0] = jet.curves[0];
  if (jet.order >= 1) {
    rows[1].resize(edgeCount);
    for (int e = 0; e < edgeCount; ++e)
      rows[1][e] = rows[0][e] + jet.curves[1][e] * (sgn / transDeg);
  }
  if (jet.order >= 2) {
    rows[2].resize(edgeCount);
    const double f = 1.0 / (transDeg * (transDeg - 1));
    for (int e = 0; e < edgeCount; ++e)
      rows[2][e] = jet.curves[2][e] * f + rows[1][e] * 2.0 - rows[0][e];
  }
  for (int k = 0; k <= jet.order; ++k) {
    for (int e = 0; e < edgeCount; ++e) {
      if (vEdge)
        p.at(e, rowIndex(k)) = rows[k][e];
      else
        p.at(rowIndex(k), e) = rows[k][e];
    }
  }
}

}  // namespace gts
