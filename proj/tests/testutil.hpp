#pragma once

#include <random>

#include "gts/bezier.hpp"
#include "gts/geometry.hpp"

namespace gts::testing {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(g);
}

inline Vec3 randomPoint(std::mt19937_64& g, double scale = 1.0) {
  return {uniform(g, -scale, scale), uniform(g, -scale, scale), uniform(g, -scale, scale)};
}

inline BBPatch randomPatch(std::mt19937_64& g, int du, int dv, double scale = 1.0) {
  BBPatch p(du, dv);
  for (auto& c : p.coeffs) c = randomPoint(g, scale);
  return p;
}

// Direct Bernstein-sum evaluation, the independent oracle for de Casteljau.
inline Vec3 bernsteinSum(const BBPatch& p, double u, double v) {
  Vec3 s{};
  for (int i = 0; i <= p.du; ++i) {
    const double bu = binomial(p.du, i) * std::pow(1.0 - u, p.du - i) * std::pow(u, i);
    for (int j = 0; j <= p.dv; ++j) {
      const double bv = binomial(p.dv, j) * std::pow(1.0 - v, p.dv - j) * std::pow(v, j);
      s += p.at(i, j) * (bu * bv);
    }
  }
  return s;
}

struct AffineMap {
  double m[3][3];
  Vec3 t;
  Vec3 apply(const Vec3& p) const {
    return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z + t.x,
            m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z + t.y,
            m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z + t.z};
  }
};

inline AffineMap randomAffine(std::mt19937_64& g) {
  AffineMap a;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a.m[r][c] = uniform(g, -1.5, 1.5);
  // keep it comfortably non-singular
  for (int d = 0; d < 3; ++d) a.m[d][d] += 2.0;
  a.t = randomPoint(g, 2.0);
  return a;
}

// Univariate cubic polynomial with vector coefficients, plus its blossom
// (polar form). Blossoms at consecutive knots are the B-spline control
// points that reproduce the polynomial exactly.
struct CubicPoly {
  Vec3 a0, a1, a2, a3;  // a0 + a1 t + a2 t^2 + a3 t^3
  Vec3 eval(double t) const { return a0 + a1 * t + a2 * (t * t) + a3 * (t * t * t); }
  Vec3 blossom(double r, double s, double t) const {
    const double e1 = (r + s + t) / 3.0;
    const double e2 = (r * s + r * t + s * t) / 3.0;
    const double e3 = r * s * t;
    return a0 + a1 * e1 + a2 * e2 + a3 * e3;
  }
};

// Bicubic polynomial g(x,y) with Vec3 coefficients c[k][l] x^k y^l.
struct BicubicPoly {
  Vec3 c[4][4];
  Vec3 eval(double x, double y) const {
    Vec3 s{};
    double xp = 1.0;
    for (int k = 0; k < 4; ++k) {
      double yp = 1.0;
      for (int l = 0; l < 4; ++l) {
        s += c[k][l] * (xp * yp);
        yp *= y;
      }
      xp *= x;
    }
    return s;
  }
  // Tensor-product blossom: symmetric in (x1,x2,x3) and in (y1,y2,y3).
  Vec3 blossom(double x1, double x2, double x3, double y1, double y2, double y3) const {
    const double ex[4] = {1.0, (x1 + x2 + x3) / 3.0,
                          (x1 * x2 + x1 * x3 + x2 * x3) / 3.0, x1 * x2 * x3};
    const double ey[4] = {1.0, (y1 + y2 + y3) / 3.0,
                          (y1 * y2 + y1 * y3 + y2 * y3) / 3.0, y1 * y2 * y3};
    Vec3 s{};
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) s += c[k][l] * (ex[k] * ey[l]);
    return s;
  }
};

inline BicubicPoly randomBicubic(std::mt19937_64& g, double scale = 1.0) {
  BicubicPoly p;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) p.c[k][l] = randomPoint(g, scale / (1.0 + k + l));
  return p;
}

}  // namespace gts::testing
