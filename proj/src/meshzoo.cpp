#include "gts/meshzoo.hpp"

#include <cmath>
#include <map>

namespace gts {

namespace {

struct Builder {
  TMesh m;
  std::map<std::pair<int, int>, int> ids;

  int vertex(int a, int b, const Vec3& p) {
    auto key = std::make_pair(a, b);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    const int id = static_cast<int>(m.vertices.size());
    m.vertices.push_back(p);
    ids.emplace(key, id);
    return id;
  }
  bool has(int a, int b) const { return ids.count({a, b}) > 0; }
  int id(int a, int b) const { return ids.at({a, b}); }
  void face(std::vector<int> f) { m.faces.push_back(std::move(f)); }
};

}  // namespace

TMesh regularGridMesh(int nx, int ny, double spacing) {
  Builder b;
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      b.vertex(i, j, {i * spacing, j * spacing, 0.0});
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      b.face({b.id(i, j), b.id(i + 1, j), b.id(i + 1, j + 1), b.id(i, j + 1)});
  return b.m;
}

TMesh t1Mesh() {
  Builder b;
  const double cx[6] = {-2, 0, 2, 4, 6, 8};
  const double fx[7] = {-2, 0, 2, 3, 4, 6, 8};
  const double ry[6] = {-2, 0, 2, 4, 6, 8};
  auto key = [](double x) { return static_cast<int>(std::lround(x * 10)); };
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) b.vertex(key(cx[c]), r, {cx[c], ry[r], 0});
  for (int r = 3; r < 6; ++r)
    for (int c = 0; c < 7; ++c) b.vertex(key(fx[c]), r, {fx[c], ry[r], 0});
  auto cid = [&](int c, int r) { return b.id(key(cx[c]), r); };
  auto fid = [&](int c, int r) { return b.id(key(fx[c]), r); };
  auto fcol = [](int c) { return c < 3 ? c : c + 1; };  // coarse col -> fine col
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 5; ++c)
      b.face({cid(c, r), cid(c + 1, r), cid(c + 1, r + 1), cid(c, r + 1)});
  for (int c = 0; c < 5; ++c) {
    if (c == 2)
      b.face({cid(2, 2), cid(3, 2), fid(4, 3), fid(3, 3), fid(2, 3)});
    else
      b.face({cid(c, 2), cid(c + 1, 2), fid(fcol(c + 1), 3), fid(fcol(c), 3)});
  }
  for (int r = 3; r < 5; ++r)
    for (int c = 0; c < 6; ++c)
      b.face({fid(c, r), fid(c + 1, r), fid(c + 1, r + 1), fid(c, r + 1)});
  return b.m;
}

TMesh t3Mesh() {
  Builder b;
  const double wx[7] = {-6, -3, 0, 3, 6, 9, 12};
  const double nx[8] = {-4, -2, 0, 2, 4, 6, 8, 10};
  const double ry[6] = {-2, 0, 2, 4, 6, 8};
  auto key = [](double x) { return static_cast<int>(std::lround(x * 10)); };
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) b.vertex(key(wx[c]), r, {wx[c], ry[r], 0});
  for (int r = 3; r < 6; ++r)
    for (int c = 0; c < 8; ++c) b.vertex(key(nx[c]), r, {nx[c], ry[r], 0});
  auto wid = [&](int c, int r) { return b.id(key(wx[c]), r); };
  auto nid = [&](int c, int r) { return b.id(key(nx[c]), r); };
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 6; ++c)
      b.face({wid(c, r), wid(c + 1, r), wid(c + 1, r + 1), wid(c, r + 1)});
  for (int r = 3; r < 5; ++r)
    for (int c = 0; c < 7; ++c)
      b.face({nid(c, r), nid(c + 1, r), nid(c + 1, r + 1), nid(c, r + 1)});
  b.face({wid(0, 2), wid(1, 2), nid(1, 3), nid(0, 3)});
  b.face({wid(1, 2), wid(2, 2), nid(2, 3), nid(1, 3)});
  // the 7-gon: wide corners (0,y1),(3,y1),(6,y1) under narrow (6,y2),(4,y2),(2,y2),(0,y2)
  b.face({wid(2, 2), wid(3, 2), wid(4, 2), nid(5, 3), nid(4, 3), nid(3, 3), nid(2, 3)});
  b.face({wid(4, 2), wid(5, 2), nid(6, 3), nid(5, 3)});
  b.face({wid(5, 2), wid(6, 2), nid(7, 3), nid(6, 3)});
  return b.m;
}

TMesh t2Mesh() {
  Builder b;
  const auto& L = TNetT2::lines;
  for (int xi = 0; xi < 7; ++xi)
    for (int yi = 0; yi < 7; ++yi)
      if (TNetT2::exists(xi, yi)) b.vertex(xi, yi, {L[xi], L[yi], 0});
  auto id = [&](int xi, int yi) { return b.id(xi, yi); };
  auto quad = [&](int x0, int y0, int x1, int y1) {
    b.face({id(x0, y0), id(x1, y0), id(x1, y1), id(x0, y1)});
  };
  // bottom fine block and right stripes
  for (int yi = 0; yi < 2; ++yi) {
    for (int xi = 0; xi < 4; ++xi) quad(xi, yi, xi + 1, yi + 1);
    quad(4, yi, 5, yi + 1);
    quad(5, yi, 6, yi + 1);
  }
  // left fine band and upper stripes
  for (int xi = 0; xi < 2; ++xi) {
    for (int yi = 2; yi < 4; ++yi) quad(xi, yi, xi + 1, yi + 1);
    quad(xi, 4, xi + 1, 5);
    quad(xi, 5, xi + 1, 6);
  }
  // coarse quadrant (x>=2, y>=2), index cells (2,4),(4,5),(5,6)
  const int cs[3] = {2, 4, 5};
  const int ce[3] = {4, 5, 6};
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c) {
      if (a == 0 && c == 0) continue;  // the hexagonal hole
      quad(cs[a], cs[c], ce[a], ce[c]);
    }
  b.face({id(2, 2), id(3, 2), id(4, 2), id(4, 4), id(2, 4), id(2, 3)});
  return b.m;
}

namespace {

struct BraceletLayout {
  static constexpr int N = 24;
  static constexpr int s1 = 4, s3 = 12, e6 = 21, e8 = 18, b10 = 8, e10 = 16;
  static constexpr int rows[11] = {-6, -4, -2, 0, 1, 2, 3, 4, 6, 8, 10};

  static bool lineAt(int y, int j) {
    switch (y) {
      case -6:
      case -4:
      case -2:
      case 0:
      case 2:
      case 4:
        return true;
      case 1:
        return j >= s1;
      case 3:
        return j >= s3;
      case 6:
        return j <= e6;
      case 8:
        return j <= e8;
      case 10:
        return j >= b10 && j <= e10;
      default:
        return false;
    }
  }
  // Doubling seam: column N is column 0 with rows remapped.
  static int seamImage(int y) { return y <= 0 ? y : 2 * y; }
};

}  // namespace

TMesh braceletMesh() {
  using BL = BraceletLayout;
  Builder b;
  const double R = 7.0;
  auto place = [&](int j, int y) {
    const double a = 2.0 * M_PI * j / BL::N;
    const double r = R + 0.12 * y;
    return Vec3{r * std::cos(a), r * std::sin(a), 0.45 * y};
  };
  for (int j = 0; j < BL::N; ++j)
    for (int y : BL::rows)
      if (BL::lineAt(y, j)) b.vertex(j, y, place(j, y));

  auto hasNode = [&](int j, int y) {
    return j >= BL::N ? b.has(j - BL::N, BL::seamImage(y)) : b.has(j, y);
  };
  auto vid = [&](int j, int y) {
    return j >= BL::N ? b.id(j - BL::N, BL::seamImage(y)) : b.id(j, y);
  };

  for (int j = 0; j < BL::N; ++j) {
    // levels present on both sides of the column pair [j, j+1]
    std::vector<int> shared;
    for (int y : BL::rows)
      if (hasNode(j, y) && hasNode(j + 1, y)) shared.push_back(y);
    for (size_t k = 0; k + 1 < shared.size(); ++k) {
      const int lo = shared[k], hi = shared[k + 1];
      std::vector<int> f{vid(j, lo), vid(j + 1, lo)};
      for (int y : BL::rows)  // T-vertex on the east edge (line starts here)
        if (y > lo && y < hi && hasNode(j + 1, y) && !hasNode(j, y))
          f.push_back(vid(j + 1, y));
      f.push_back(vid(j + 1, hi));
      f.push_back(vid(j, hi));
      for (int k2 = 10; k2 >= 0; --k2) {  // T-vertex on the west edge
        const int y = BL::rows[k2];
        if (y > lo && y < hi && hasNode(j, y) && !hasNode(j + 1, y))
          f.push_back(vid(j, y));
      }
      b.face(std::move(f));
    }
  }
  return b.m;
}

TMesh halfIntervalMesh() { return t1Mesh(); }

TMesh pairedTInfeasibleMesh() {
  // The same doubling-seam mechanism embedded in a longer bracelet with the
  // two terminating lines on nearby columns, so the two pentagon nets sit
  // horizontally side by side.
  using BL = BraceletLayout;
  Builder b;
  const int N = 30, s1 = 6, s3 = 14;
  auto lineAt = [&](int y, int j) {
    switch (y) {
      case -6:
      case -4:
      case -2:
      case 0:
      case 2:
      case 4:
        return true;
      case 1:
        return j >= s1;
      case 3:
        return j >= s3;
      case 6:
        return j <= 27;
      case 8:
        return j <= 24;
      case 10:
        return j >= 10 && j <= 22;
      default:
        return false;
    }
  };
  auto place = [&](int j, int y) {
    const double a = 2.0 * M_PI * j / N;
    const double r = 8.0 + 0.12 * y;
    return Vec3{r * std::cos(a), r * std::sin(a), 0.45 * y};
  };
  for (int j = 0; j < N; ++j)
    for (int y : BL::rows)
      if (lineAt(y, j)) b.vertex(j, y, place(j, y));
  auto hasNode = [&](int j, int y) {
    return j >= N ? b.has(j - N, BL::seamImage(y)) : b.has(j, y);
  };
  auto vid = [&](int j, int y) {
    return j >= N ? b.id(j - N, BL::seamImage(y)) : b.id(j, y);
  };
  for (int j = 0; j < N; ++j) {
    std::vector<int> shared;
    for (int y : BL::rows)
      if (hasNode(j, y) && hasNode(j + 1, y)) shared.push_back(y);
    for (size_t k = 0; k + 1 < shared.size(); ++k) {
      const int lo = shared[k], hi = shared[k + 1];
      std::vector<int> f{vid(j, lo), vid(j + 1, lo)};
      for (int y : BL::rows)
        if (y > lo && y < hi && hasNode(j + 1, y) && !hasNode(j, y))
          f.push_back(vid(j + 1, y));
      f.push_back(vid(j + 1, hi));
      f.push_back(vid(j, hi));
      for (int k2 = 10; k2 >= 0; --k2) {
        const int y = BL::rows[k2];
        if (y > lo && y < hi && hasNode(j, y) && !hasNode(j + 1, y))
          f.push_back(vid(j, y));
      }
      b.face(std::move(f));
    }
  }
  return b.m;
}

}  // namespace gts
