#include "gts/tnet.hpp"

namespace gts {

namespace {

// Knot lines of the canonical parameterization. Coarse families are
// uniform with spacing 2; the refined families carry the inserted lines.
const double kT1CoarseX[6] = {-2, 0, 2, 4, 6, 8};
const double kT1FineX[7] = {-2, 0, 2, 3, 4, 6, 8};
const double kRowY[6] = {-2, 0, 2, 4, 6, 8};

const double kT3WideX[7] = {-6, -3, 0, 3, 6, 9, 12};
const double kT3NarrowX[8] = {-4, -2, 0, 2, 4, 6, 8, 10};

double tripleAt(const double* knots, int n, int i, int k) {
  // knot i-1+k of the triple around index i, extrapolated uniformly
  const int j = i - 1 + k;
  if (j < 0) return knots[0] - (knots[1] - knots[0]) * (-j);
  if (j >= n) return knots[n - 1] + (knots[n - 1] - knots[n - 2]) * (j - n + 1);
  return knots[j];
}

}  // namespace

Vec3 Bicubic::eval(double x, double y) const {
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

Vec3 Bicubic::blossom(double x1, double x2, double x3, double y1, double y2,
                      double y3) const {
  const double ex[4] = {1.0, (x1 + x2 + x3) / 3.0,
                        (x1 * x2 + x1 * x3 + x2 * x3) / 3.0, x1 * x2 * x3};
  const double ey[4] = {1.0, (y1 + y2 + y3) / 3.0,
                        (y1 * y2 + y1 * y3 + y2 * y3) / 3.0, y1 * y2 * y3};
  Vec3 s{};
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) s += c[k][l] * (ex[k] * ey[l]);
  return s;
}

std::array<Vec3, 18> TNetT1::innerNodes() const {
  std::array<Vec3, 18> n;
  for (int c = 0; c < 4; ++c) n[c] = coarse[1][c + 1];
  for (int c = 0; c < 4; ++c) n[4 + c] = coarse[2][c + 1];
  for (int c = 0; c < 5; ++c) n[8 + c] = fine[0][c + 1];
  for (int c = 0; c < 5; ++c) n[13 + c] = fine[1][c + 1];
  return n;
}

void TNetT1::setInnerNodes(const std::array<Vec3, 18>& n) {
  for (int c = 0; c < 4; ++c) coarse[1][c + 1] = n[c];
  for (int c = 0; c < 4; ++c) coarse[2][c + 1] = n[4 + c];
  for (int c = 0; c < 5; ++c) fine[0][c + 1] = n[8 + c];
  for (int c = 0; c < 5; ++c) fine[1][c + 1] = n[13 + c];
}

TNetT1 TNetT1::mirroredX() const {
  TNetT1 m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 6; ++c) m.coarse[r][c] = coarse[r][5 - c];
    for (int c = 0; c < 7; ++c) m.fine[r][c] = fine[r][6 - c];
  }
  return m;
}

std::vector<Vec3> TNetT3::innerNodes() const {
  std::vector<Vec3> n;
  for (int r = 1; r < 3; ++r)
    for (int c = 1; c < 6; ++c) n.push_back(wide[r][c]);
  for (int r = 0; r < 2; ++r)
    for (int c = 1; c < 7; ++c) n.push_back(narrow[r][c]);
  return n;
}

TNetT3 TNetT3::mirroredX() const {
  TNetT3 m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 7; ++c) m.wide[r][c] = wide[r][6 - c];
    for (int c = 0; c < 8; ++c) m.narrow[r][c] = narrow[r][7 - c];
  }
  return m;
}

std::vector<Vec3> TNetT2::innerNodes() const {
  std::vector<Vec3> n;
  for (int yi = 0; yi < 7; ++yi)
    for (int xi = 0; xi < 7; ++xi)
      if (exists(xi, yi)) n.push_back(node[xi][yi]);
  return n;
}

TNetT2 TNetT2::transposed() const {
  TNetT2 t;
  for (int xi = 0; xi < 7; ++xi)
    for (int yi = 0; yi < 7; ++yi)
      if (exists(xi, yi)) {
        const Vec3& p = node[yi][xi];
        t.node[xi][yi] = {p.y, p.x, p.z};
      }
  return t;
}

TNetT1 canonicalT1() {
  TNetT1 n;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 6; ++c) n.coarse[r][c] = {kT1CoarseX[c], kRowY[r], 0.0};
    for (int c = 0; c < 7; ++c) n.fine[r][c] = {kT1FineX[c], kRowY[r + 3], 0.0};
  }
  return n;
}

TNetT3 canonicalT3() {
  TNetT3 n;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 7; ++c) n.wide[r][c] = {kT3WideX[c], kRowY[r], 0.0};
    for (int c = 0; c < 8; ++c) n.narrow[r][c] = {kT3NarrowX[c], kRowY[r + 3], 0.0};
  }
  return n;
}

TNetT2 canonicalT2() {
  TNetT2 n;
  for (int xi = 0; xi < 7; ++xi)
    for (int yi = 0; yi < 7; ++yi)
      if (TNetT2::exists(xi, yi))
        n.node[xi][yi] = {TNetT2::lines[xi], TNetT2::lines[yi], 0.0};
  return n;
}

TNetT1 t1FromBicubic(const Bicubic& g) {
  TNetT1 n;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 6; ++c)
      n.coarse[r][c] =
          g.blossom(tripleAt(kT1CoarseX, 6, c, 0), tripleAt(kT1CoarseX, 6, c, 1),
                    tripleAt(kT1CoarseX, 6, c, 2), tripleAt(kRowY, 6, r, 0),
                    tripleAt(kRowY, 6, r, 1), tripleAt(kRowY, 6, r, 2));
    for (int c = 0; c < 7; ++c)
      n.fine[r][c] =
          g.blossom(tripleAt(kT1FineX, 7, c, 0), tripleAt(kT1FineX, 7, c, 1),
                    tripleAt(kT1FineX, 7, c, 2), tripleAt(kRowY, 6, r + 3, 0),
                    tripleAt(kRowY, 6, r + 3, 1), tripleAt(kRowY, 6, r + 3, 2));
  }
  return n;
}

TNetT3 t3FromBicubic(const Bicubic& g) {
  TNetT3 n;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 7; ++c)
      n.wide[r][c] =
          g.blossom(tripleAt(kT3WideX, 7, c, 0), tripleAt(kT3WideX, 7, c, 1),
                    tripleAt(kT3WideX, 7, c, 2), tripleAt(kRowY, 6, r, 0),
                    tripleAt(kRowY, 6, r, 1), tripleAt(kRowY, 6, r, 2));
    for (int c = 0; c < 8; ++c)
      n.narrow[r][c] =
          g.blossom(tripleAt(kT3NarrowX, 8, c, 0), tripleAt(kT3NarrowX, 8, c, 1),
                    tripleAt(kT3NarrowX, 8, c, 2), tripleAt(kRowY, 6, r + 3, 0),
                    tripleAt(kRowY, 6, r + 3, 1), tripleAt(kRowY, 6, r + 3, 2));
  }
  return n;
}

TNetT2 t2FromBicubic(const Bicubic& g) {
  TNetT2 n;
  const auto& L = TNetT2::lines;
  auto triple = [&](int i, int k) { return tripleAt(L.data(), 7, i, k); };
  for (int xi = 0; xi < 7; ++xi)
    for (int yi = 0; yi < 7; ++yi)
      if (TNetT2::exists(xi, yi))
        n.node[xi][yi] = g.blossom(triple(xi, 0), triple(xi, 1), triple(xi, 2),
                                   triple(yi, 0), triple(yi, 1), triple(yi, 2));
  return n;
}

}  // namespace gts
