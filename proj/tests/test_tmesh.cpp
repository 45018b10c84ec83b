#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gts/meshzoo.hpp"
#include "gts/tmesh.hpp"
#include "testutil.hpp"

using namespace gts;
using namespace gts::testing;

TEST_CASE("adjacency: single quad and 2x2 grid") {
  TMesh q = regularGridMesh(1, 1);
  buildAdjacency(q);
  int boundary = 0, interior = 0;
  for (const auto& h : q.he) (h.twin < 0 ? boundary : interior)++;
  CHECK(boundary == 4);
  CHECK(interior == 0);

  TMesh g = regularGridMesh(2, 2);
  buildAdjacency(g);
  int interiorEdges = 0;
  for (const auto& h : g.he)
    if (h.twin >= 0) ++interiorEdges;
  CHECK(interiorEdges / 2 == 4);
}

TEST_CASE("adjacency: non-manifold input throws") {
  TMesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  m.faces = {{0, 1, 2, 3}, {0, 1, 2, 3}};
  CHECK_THROWS_AS(buildAdjacency(m), StructuralError);
}

TEST_CASE("bracelet mesh is manifold and closed in one direction") {
  TMesh m = braceletMesh();
  buildAdjacency(m);
  CHECK(m.countBoundaryLoops() == 2);
}

TEST_CASE("detect: all-quad grid yields nothing") {
  TMesh g = regularGridMesh(6, 6);
  buildAdjacency(g);
  DetectResult r = detectTNets(g);
  CHECK(r.nets.empty());
  CHECK(r.report.allOk());
}

TEST_CASE("detect: canonical T1 mesh") {
  TMesh m = t1Mesh();
  buildAdjacency(m);
  DetectResult r = detectTNets(m);
  REQUIRE(r.report.allOk());
  REQUIRE(r.nets.size() == 1);
  CHECK(r.nets[0].kind == TNetKind::T1);
  const TNetT1& net = std::get<TNetT1>(r.nets[0].net);
  TNetT1 want = canonicalT1();
  auto same = [&](const TNetT1& a, const TNetT1& b) {
    double w = 0;
    for (int r2 = 0; r2 < 3; ++r2) {
      for (int c = 0; c < 6; ++c) w = std::max(w, (a.coarse[r2][c] - b.coarse[r2][c]).norm());
      for (int c = 0; c < 7; ++c) w = std::max(w, (a.fine[r2][c] - b.fine[r2][c]).norm());
    }
    return w < 1e-12;
  };
  CHECK((same(net, want) || same(net, want.mirroredX())));
}

TEST_CASE("detect: T1 invariance under relabeling") {
  auto g = rng(700);
  TMesh m = t1Mesh();
  std::vector<int> perm(m.vertices.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), g);
  TMesh p;
  p.vertices.resize(m.vertices.size());
  for (size_t i = 0; i < m.vertices.size(); ++i) p.vertices[perm[i]] = m.vertices[i];
  p.faces = m.faces;
  for (auto& f : p.faces)
    for (auto& v : f) v = perm[v];
  std::shuffle(p.faces.begin(), p.faces.end(), g);

  buildAdjacency(m);
  buildAdjacency(p);
  DetectResult a = detectTNets(m), b = detectTNets(p);
  REQUIRE(a.nets.size() == 1);
  REQUIRE(b.nets.size() == 1);
  const auto na = std::get<TNetT1>(a.nets[0].net).innerNodes();
  const auto nb = std::get<TNetT1>(b.nets[0].net).innerNodes();
  double w = 0;
  for (int k = 0; k < 18; ++k) w = std::max(w, (na[k] - nb[k]).norm());
  CHECK(w < 1e-13);
}

TEST_CASE("detect: canonical T3 mesh") {
  TMesh m = t3Mesh();
  buildAdjacency(m);
  DetectResult r = detectTNets(m);
  if (!r.report.allOk())
    for (const auto& is : r.report.issues) MESSAGE(is.reason);
  REQUIRE(r.report.allOk());
  REQUIRE(r.nets.size() == 1);
  CHECK(r.nets[0].kind == TNetKind::T3Parallel);
  const TNetT3& net = std::get<TNetT3>(r.nets[0].net);
  TNetT3 want = canonicalT3();
  auto same = [&](const TNetT3& a, const TNetT3& b) {
    double w = 0;
    for (int r2 = 0; r2 < 3; ++r2) {
      for (int c = 0; c < 7; ++c) w = std::max(w, (a.wide[r2][c] - b.wide[r2][c]).norm());
      for (int c = 0; c < 8; ++c) w = std::max(w, (a.narrow[r2][c] - b.narrow[r2][c]).norm());
    }
    return w < 1e-12;
  };
  CHECK((same(net, want) || same(net, want.mirroredX())));
}

TEST_CASE("detect: canonical T2 mesh") {
  TMesh m = t2Mesh();
  buildAdjacency(m);
  DetectResult r = detectTNets(m);
  if (!r.report.allOk())
    for (const auto& is : r.report.issues) MESSAGE(is.reason);
  REQUIRE(r.report.allOk());
  REQUIRE(r.nets.size() == 1);
  CHECK(r.nets[0].kind == TNetKind::T2Crossing);
  const TNetT2& net = std::get<TNetT2>(r.nets[0].net);
  TNetT2 want = canonicalT2();
  double w = 0, wt = 0;
  for (int xi = 0; xi < 7; ++xi)
    for (int yi = 0; yi < 7; ++yi)
      if (TNetT2::exists(xi, yi)) {
        w = std::max(w, (net.node[xi][yi] - want.node[xi][yi]).norm());
        wt = std::max(wt, (net.node[xi][yi] - want.node[yi][xi]).norm());
      }
  CHECK((w < 1e-12 || wt < 1e-12));
}

TEST_CASE("detect: bracelet carries two clean T1 nets") {
  TMesh m = braceletMesh();
  buildAdjacency(m);
  DetectResult r = detectTNets(m);
  if (!r.report.allOk())
    for (const auto& is : r.report.issues) MESSAGE(is.reason, " face ", is.seedFace);
  CHECK(r.report.allOk());
  CHECK(r.nets.size() == 2);
  for (const auto& n : r.nets) CHECK(n.kind == TNetKind::T1);
}

TEST_CASE("detect: rigid motion invariance of classification") {
  TMesh m = t3Mesh();
  const double th = 1.1;
  for (auto& v : m.vertices)
    v = {v.x * std::cos(th) - v.y * std::sin(th) + 3.0,
         v.x * std::sin(th) + v.y * std::cos(th) - 1.0, v.z + 0.5};
  buildAdjacency(m);
  DetectResult r = detectTNets(m);
  REQUIRE(r.nets.size() == 1);
  CHECK(r.nets[0].kind == TNetKind::T3Parallel);
}

TEST_CASE("extractInnerNodes: T1 order and wrong-kind error") {
  TMesh m = t1Mesh();
  buildAdjacency(m);
  DetectResult r = detectTNets(m);
  REQUIRE(r.nets.size() == 1);
  auto nodes = extractInnerNodes(r.nets[0]);
  CHECK(std::abs(nodes[0].y - 0.0) < 1e-14);
  CHECK(std::abs(nodes[8].y - 4.0) < 1e-14);
  CHECK(std::abs(nodes[10].x - 3.0) < 1e-14);  // the inserted column

  TMesh m2 = t2Mesh();
  buildAdjacency(m2);
  DetectResult r2 = detectTNets(m2);
  REQUIRE(r2.nets.size() == 1);
  CHECK_THROWS_AS(extractInnerNodes(r2.nets[0]), std::domain_error);
}

TEST_CASE("re-embedding vertexIds reproduces the mesh vertices") {
  TMesh m = t1Mesh();
  buildAdjacency(m);
  DetectResult r = detectTNets(m);
  REQUIRE(r.nets.size() == 1);
  const auto& net = std::get<TNetT1>(r.nets[0].net);
  const auto& ids = r.nets[0].vertexIds;
  REQUIRE(ids.size() == 39);
  int k = 0;
  for (int row = 0; row < 3; ++row)
    for (int c = 0; c < 6; ++c)
      CHECK((m.vertices[ids[k++]] - net.coarse[row][c]).norm() < 1e-14);
  for (int row = 0; row < 3; ++row)
    for (int c = 0; c < 7; ++c)
      CHECK((m.vertices[ids[k++]] - net.fine[row][c]).norm() < 1e-14);
}
