#include "gts/tmesh.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gts {

int TMesh::valence(int v) const {
  int n = 0;
  for (const auto& h : he)
    if (h.from == v) ++n;
  return n;
}

bool TMesh::boundaryVertex(int v) const {
  for (const auto& h : he)
    if ((h.from == v || h.to == v) && h.twin < 0) return true;
  return false;
}

int TMesh::findHalfEdge(int from, int to) const {
  for (size_t i = 0; i < he.size(); ++i)
    if (he[i].from == from && he[i].to == to) return static_cast<int>(i);
  return -1;
}

int TMesh::countBoundaryLoops() const {
  std::set<int> boundary;
  for (size_t i = 0; i < he.size(); ++i)
    if (he[i].twin < 0) boundary.insert(static_cast<int>(i));
  int loops = 0;
  while (!boundary.empty()) {
    ++loops;
    int h = *boundary.begin();
    int cur = h;
    do {
      boundary.erase(cur);
      // next boundary half-edge: rotate around cur.to until the outgoing
      // edge without twin appears
      const int v = he[cur].to;
      int cand = -1;
      for (size_t i = 0; i < he.size(); ++i)
        if (he[i].from == v && he[i].twin < 0 && boundary.count(static_cast<int>(i)))
          cand = static_cast<int>(i);
      if (cand < 0) break;
      cur = cand;
    } while (cur != h);
  }
  return loops;
}

void buildAdjacency(TMesh& m) {
  m.he.clear();
  m.vertexEdge.assign(m.vertices.size(), -1);
  std::map<std::pair<int, int>, int> dir;
  for (size_t f = 0; f < m.faces.size(); ++f) {
    const auto& cyc = m.faces[f];
    const int n = static_cast<int>(cyc.size());
    if (n < 3) throw StructuralError("face with fewer than 3 vertices");
    const int base = static_cast<int>(m.he.size());
    for (int k = 0; k < n; ++k) {
      TMesh::HalfEdge h;
      h.from = cyc[k];
      h.to = cyc[(k + 1) % n];
      h.face = static_cast<int>(f);
      h.next = base + (k + 1) % n;
      if (h.from < 0 || h.from >= static_cast<int>(m.vertices.size()) || h.to < 0 ||
          h.to >= static_cast<int>(m.vertices.size()))
        throw StructuralError("face references missing vertex");
      auto key = std::make_pair(h.from, h.to);
      if (dir.count(key)) {
        std::ostringstream os;
        os << "non-manifold or inconsistently oriented edge " << h.from << "-" << h.to;
        throw StructuralError(os.str());
      }
      dir[key] = base + k;
      m.he.push_back(h);
      if (m.vertexEdge[h.from] < 0) m.vertexEdge[h.from] = base + k;
    }
  }
  for (size_t i = 0; i < m.he.size(); ++i) {
    auto it = dir.find({m.he[i].to, m.he[i].from});
    m.he[i].twin = it == dir.end() ? -1 : it->second;
  }
  m.adjacencyBuilt = true;
}

namespace {

struct WalkError : std::runtime_error {
  std::vector<int> offending;
  WalkError(const std::string& what, std::vector<int> off = {})
      : std::runtime_error(what), offending(std::move(off)) {}
};

// Combinatorial walking helpers on the half-edge structure.
struct Walker {
  const TMesh& m;
  std::set<int> collected;

  explicit Walker(const TMesh& mesh) : m(mesh) {}

  std::vector<int> neighbors(int v) const {
    std::set<int> out;
    for (const auto& h : m.he) {
      if (h.from == v) out.insert(h.to);
      if (h.to == v) out.insert(h.from);
    }
    return {out.begin(), out.end()};
  }

  std::vector<int> edgeFaces(int a, int b) const {
    std::vector<int> f;
    const int h1 = m.findHalfEdge(a, b);
    const int h2 = m.findHalfEdge(b, a);
    if (h1 >= 0) f.push_back(m.he[h1].face);
    if (h2 >= 0) f.push_back(m.he[h2].face);
    return f;
  }

  // Continues the walk u -> v -> w through v: the straight continuation is
  // the neighbor edge sharing no face with the incoming edge. Orientation
  // free and valid at boundary corners.
  int step(int u, int v) {
    const auto fin = edgeFaces(u, v);
    if (fin.empty()) throw WalkError("walk over a missing edge", {u, v});
    int found = -1;
    for (int w : neighbors(v)) {
      if (w == u) continue;
      bool shares = false;
      for (int f : edgeFaces(v, w))
        for (int g : fin)
          if (f == g) shares = true;
      if (shares) continue;
      if (found >= 0) throw WalkError("ambiguous walk direction at vertex", {v});
      found = w;
    }
    if (found < 0) throw WalkError("walk cannot continue at vertex", {v});
    collected.insert(found);
    return found;
  }

  // Walks n nodes beyond `to`, starting from the directed pair (from, to).
  std::vector<int> walk(int from, int to, int n) {
    std::vector<int> out;
    int u = from, v = to;
    for (int k = 0; k < n; ++k) {
      const int w = step(u, v);
      out.push_back(w);
      u = v;
      v = w;
    }
    return out;
  }

  // The unique neighbor of v not yet collected.
  int remainingNeighbor(int v) const {
    int found = -1;
    for (int w : neighbors(v)) {
      if (collected.count(w)) continue;
      if (found >= 0) throw WalkError("ambiguous walk direction at vertex", {v});
      found = w;
    }
    if (found < 0) throw WalkError("no remaining direction at vertex", {v});
    return found;
  }

  void touch(int v) { collected.insert(v); }
};

// Face cycle positions of a vertex.
int cyclePos(const std::vector<int>& cyc, int v) {
  for (size_t i = 0; i < cyc.size(); ++i)
    if (cyc[i] == v) return static_cast<int>(i);
  return -1;
}

std::vector<int> facesTouching(const TMesh& m, const std::set<int>& nodes) {
  std::vector<int> out;
  for (size_t f = 0; f < m.faces.size(); ++f)
    for (int v : m.faces[f])
      if (nodes.count(v)) {
        out.push_back(static_cast<int>(f));
        break;
      }
  return out;
}

// ---- T1 -------------------------------------------------------------

struct T1Ids {
  // rows bottom to top: coarse rows y-1,y0,y1 (6 each), fine rows
  // y2,y3,y4 (7 each)
  std::array<std::array<int, 6>, 3> coarse;
  std::array<std::array<int, 7>, 3> fine;

  std::vector<int> flat() const {
    std::vector<int> v;
    for (const auto& r : coarse)
      for (int x : r) v.push_back(x);
    for (const auto& r : fine)
      for (int x : r) v.push_back(x);
    return v;
  }
  T1Ids mirrored() const {
    T1Ids o;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 6; ++c) o.coarse[r][c] = coarse[r][5 - c];
      for (int c = 0; c < 7; ++c) o.fine[r][c] = fine[r][6 - c];
    }
    return o;
  }
};

T1Ids walkT1(const TMesh& m, int pent, int tau) {
  const auto& cyc = m.faces[pent];
  const int p = cyclePos(cyc, tau);
  auto at = [&](int k) { return cyc[(p + k) % 5]; };
  // face cycle from tau: D, A, B, C in the as-stored orientation
  const int D = at(1), A = at(2), B = at(3), C = at(4);

  Walker w(m);
  for (int v : {tau, D, A, B, C}) w.touch(v);

  T1Ids ids;
  // fine row y2: [w2, w1, D, tau, C, e1, e2]
  auto fw = w.walk(tau, D, 2);
  auto fe = w.walk(tau, C, 2);
  ids.fine[0] = {fw[1], fw[0], D, tau, C, fe[0], fe[1]};
  // coarse row y1: [w2, w1, A, B, e1, e2]
  auto cw = w.walk(B, A, 2);
  auto ce = w.walk(A, B, 2);
  ids.coarse[2] = {cw[1], cw[0], A, B, ce[0], ce[1]};

  // rows y0 and y-1: continue downward through each y1 node, entering from
  // the fine row above (coarse column c sits below fine column fcol(c))
  auto fcol = [](int c) { return c < 3 ? c : c + 1; };
  for (int c = 0; c < 6; ++c) {
    const int v = ids.coarse[2][c];
    auto down = w.walk(ids.fine[0][fcol(c)], v, 2);
    ids.coarse[1][c] = down[0];
    ids.coarse[0][c] = down[1];
  }
  // rows y3 and y4: upward through each fine row node
  for (int c = 0; c < 7; ++c) {
    const int v = ids.fine[0][c];
    if (c == 3) {  // the T-junction's third edge
      const int v1 = w.remainingNeighbor(v);
      w.touch(v1);
      ids.fine[1][c] = v1;
      ids.fine[2][c] = w.walk(v, v1, 1)[0];
    } else {
      const int below = ids.coarse[2][c < 3 ? c : c - 1];
      auto up = w.walk(below, v, 2);
      ids.fine[1][c] = up[0];
      ids.fine[2][c] = up[1];
    }
  }

  // structural validation
  if (m.valence(tau) != 3) throw WalkError("T-junction vertex is not valence 3", {tau});
  std::set<int> all;
  for (int v : ids.flat()) {
    if (!all.insert(v).second) throw WalkError("net footprint self-overlaps", {v});
  }
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 4; ++c) {
      const int v = ids.coarse[r][c];
      if (m.valence(v) != 4 || m.boundaryVertex(v))
        throw WalkError("irregular interior node in net", {v});
    }
  for (int r = 0; r <= 1; ++r)
    for (int c = 1; c <= 5; ++c) {
      const int v = ids.fine[r][c];
      if (v == tau) continue;
      if (m.valence(v) != 4 || m.boundaryVertex(v))
        throw WalkError("irregular interior node in net", {v});
    }
  return ids;
}

// ---- T3 -------------------------------------------------------------

struct T3Ids {
  std::array<std::array<int, 7>, 3> wide;
  std::array<std::array<int, 8>, 3> narrow;
  std::vector<int> flat() const {
    std::vector<int> v;
    for (const auto& r : wide)
      for (int x : r) v.push_back(x);
    for (const auto& r : narrow)
      for (int x : r) v.push_back(x);
    return v;
  }
  T3Ids mirrored() const {
    T3Ids o;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 7; ++c) o.wide[r][c] = wide[r][6 - c];
      for (int c = 0; c < 8; ++c) o.narrow[r][c] = narrow[r][7 - c];
    }
    return o;
  }
};

T3Ids walkT3(const TMesh& m, int face, int tauS) {
  const auto& cyc = m.faces[face];
  const int p = cyclePos(cyc, tauS);
  auto at = [&](int k) { return cyc[(p + k) % 7]; };
  // from the lone T: E, E', c2, c1, W', W in one orientation
  const int E = at(1), Ep = at(2), c2 = at(3), c1 = at(4), Wp = at(5), W = at(6);
  if (m.valence(c1) != 3 || m.valence(c2) != 3)
    throw WalkError("7-gon does not carry the facing T pair", {c1, c2});

  Walker w(m);
  for (int v : {tauS, E, Ep, c2, c1, Wp, W}) w.touch(v);

  T3Ids ids;
  auto we = w.walk(tauS, W, 2);
  auto ee = w.walk(tauS, E, 2);
  ids.wide[2] = {we[1], we[0], W, tauS, E, ee[0], ee[1]};
  auto nw = w.walk(c1, Wp, 2);
  auto ne = w.walk(c2, Ep, 2);
  ids.narrow[0] = {nw[1], nw[0], Wp, c1, c2, Ep, ne[0], ne[1]};

  // wide column c sits below narrow column wideUp(c); the lone T has no
  // upward edge, the facing pair none downward
  auto wideUp = [](int c) { return c < 3 ? c : c + 1; };
  for (int c = 0; c < 7; ++c) {
    const int v = ids.wide[2][c];
    std::vector<int> down;
    if (c == 3) {
      const int v0 = w.remainingNeighbor(v);
      w.touch(v0);
      ids.wide[1][c] = v0;
      ids.wide[0][c] = w.walk(v, v0, 1)[0];
      continue;
    }
    down = w.walk(ids.narrow[0][wideUp(c)], v, 2);
    ids.wide[1][c] = down[0];
    ids.wide[0][c] = down[1];
  }
  for (int c = 0; c < 8; ++c) {
    const int v = ids.narrow[0][c];
    if (c == 3 || c == 4) {  // the facing T pair
      const int v1 = w.remainingNeighbor(v);
      w.touch(v1);
      ids.narrow[1][c] = v1;
      ids.narrow[2][c] = w.walk(v, v1, 1)[0];
    } else {
      const int below = ids.wide[2][c < 3 ? c : c - 1];
      auto up = w.walk(below, v, 2);
      ids.narrow[1][c] = up[0];
      ids.narrow[2][c] = up[1];
    }
  }

  std::set<int> all;
  for (int v : ids.flat())
    if (!all.insert(v).second) throw WalkError("net footprint self-overlaps", {v});
  return ids;
}

// ---- T2 -------------------------------------------------------------

struct T2Ids {
  std::array<std::array<int, 7>, 7> id;  // [xi][yi], -1 where absent
  std::vector<int> flat() const {
    std::vector<int> v;
    for (int yi = 0; yi < 7; ++yi)
      for (int xi = 0; xi < 7; ++xi)
        if (TNetT2::exists(xi, yi)) v.push_back(id[xi][yi]);
    return v;
  }
  T2Ids transposed() const {
    T2Ids o;
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) o.id[a][b] = id[b][a];
    return o;
  }
};

T2Ids walkT2(const TMesh& m, int face, int tauB, int tauL, int LL, int BR, int UR,
             int TL) {
  Walker w(m);
  for (int v : {tauB, tauL, LL, BR, UR, TL}) w.touch(v);

  T2Ids ids;
  for (auto& col : ids.id) col.fill(-1);
  auto set = [&](int xi, int yi, int v) {
    ids.id[xi][yi] = v;
    w.touch(v);
  };
  set(2, 2, LL);
  set(3, 2, tauB);
  set(4, 2, BR);
  set(4, 4, UR);
  set(2, 4, TL);
  set(2, 3, tauL);

  // row y=2 outward
  auto rw = w.walk(tauB, LL, 2);
  set(1, 2, rw[0]);
  set(0, 2, rw[1]);
  auto re = w.walk(tauB, BR, 2);
  set(5, 2, re[0]);
  set(6, 2, re[1]);
  // column x=2 outward
  auto cn = w.walk(tauL, TL, 2);
  set(2, 5, cn[0]);
  set(2, 6, cn[1]);
  auto cs = w.walk(tauL, LL, 2);
  set(2, 1, cs[0]);
  set(2, 0, cs[1]);
  // third edges of the T vertices
  {
    const int v = w.remainingNeighbor(tauB);
    w.touch(v);
    set(3, 1, v);
    set(3, 0, w.walk(tauB, v, 1)[0]);
    const int v2 = w.remainingNeighbor(tauL);
    w.touch(v2);
    set(1, 3, v2);
    set(0, 3, w.walk(tauL, v2, 1)[0]);
  }
  // east of UR: straight continuation of the hole edge TL->UR; then its
  // north is the only open direction
  {
    auto e = w.walk(TL, UR, 2);
    set(5, 4, e[0]);
    set(6, 4, e[1]);
    const int v = w.remainingNeighbor(UR);
    w.touch(v);
    set(4, 5, v);
    set(4, 6, w.walk(UR, v, 1)[0]);
  }
  // south of BR, west of TL (all other directions collected)
  {
    const int v = w.remainingNeighbor(BR);
    w.touch(v);
    set(4, 1, v);
    set(4, 0, w.walk(BR, v, 1)[0]);
  }
  {
    const int v = w.remainingNeighbor(TL);
    w.touch(v);
    set(1, 4, v);
    set(0, 4, w.walk(TL, v, 1)[0]);
  }
  // rows y=1 and y=0 across the bottom band; the rows above are complete,
  // so the remaining direction at each anchor is the outward one
  for (int yi : {1, 0}) {
    const int vw = w.remainingNeighbor(ids.id[2][yi]);
    w.touch(vw);
    set(1, yi, vw);
    set(0, yi, w.walk(ids.id[2][yi], vw, 1)[0]);
    const int ve = w.remainingNeighbor(ids.id[4][yi]);
    w.touch(ve);
    set(5, yi, ve);
    set(6, yi, w.walk(ids.id[4][yi], ve, 1)[0]);
  }
  // left band columns x=0,1 and the coarse columns x=6,8 upward
  for (int xi : {1, 0}) {
    const int vn = w.remainingNeighbor(ids.id[xi][4]);
    w.touch(vn);
    set(xi, 5, vn);
    set(xi, 6, w.walk(ids.id[xi][4], vn, 1)[0]);
  }
  for (int xi : {5, 6}) {
    const int vn = w.remainingNeighbor(ids.id[xi][4]);
    w.touch(vn);
    set(xi, 5, vn);
    set(xi, 6, w.walk(ids.id[xi][4], vn, 1)[0]);
  }

  std::set<int> all;
  for (int v : ids.flat())
    if (v < 0 || !all.insert(v).second)
      throw WalkError("net footprint incomplete or self-overlapping", {v});
  return ids;
}

template <class Ids>
std::vector<int> lexPick(const Ids& a, const Ids& b, bool& mirrored) {
  const auto fa = a.flat();
  const auto fb = b.flat();
  mirrored = std::lexicographical_compare(fb.begin(), fb.end(), fa.begin(), fa.end());
  return mirrored ? fb : fa;
}

}  // namespace

DetectResult detectTNets(const TMesh& m) {
  if (!m.adjacencyBuilt) throw StructuralError("detectTNets: adjacency not built");
  DetectResult res;
  for (size_t f = 0; f < m.faces.size(); ++f) {
    const int n = static_cast<int>(m.faces[f].size());
    if (n == 4) continue;
    SeparationIssue issue;
    issue.seedFace = static_cast<int>(f);
    try {
      if (n == 5) {
        // the unique interior valence-3 vertex is the T-junction
        int tau = -1;
        for (int v : m.faces[f])
          if (m.valence(v) == 3 && !m.boundaryVertex(v)) {
            if (tau >= 0) throw WalkError("pentagon with two valence-3 vertices", {v});
            tau = v;
          }
        if (tau < 0) throw WalkError("pentagon without interior valence-3 vertex");
        T1Ids ids = walkT1(m, static_cast<int>(f), tau);
        bool mir = false;
        lexPick(ids, ids.mirrored(), mir);
        if (mir) ids = ids.mirrored();
        DetectedNet net;
        net.kind = TNetKind::T1;
        net.seedFace = static_cast<int>(f);
        TNetT1 t;
        for (int r = 0; r < 3; ++r) {
          for (int c = 0; c < 6; ++c) t.coarse[r][c] = m.vertices[ids.coarse[r][c]];
          for (int c = 0; c < 7; ++c) t.fine[r][c] = m.vertices[ids.fine[r][c]];
        }
        net.net = t;
        net.vertexIds = ids.flat();
        std::set<int> inner(net.vertexIds.begin(), net.vertexIds.end());
        net.footprintFaces = facesTouching(m, inner);
        res.nets.push_back(std::move(net));
      } else if (n == 6) {
        std::vector<int> t3v;
        for (int v : m.faces[f])
          if (m.valence(v) == 3 && !m.boundaryVertex(v)) t3v.push_back(v);
        if (t3v.size() != 2)
          throw WalkError("6-gon without exactly two T-junctions");
        // the corner between the two T-sides is cycle-adjacent to both
        const auto& cyc = m.faces[f];
        int LL = -1, tauB = -1, tauL = -1;
        for (int k = 0; k < 6; ++k) {
          const int prev = cyc[(k + 5) % 6], cur = cyc[k], nxt = cyc[(k + 1) % 6];
          const bool pT = std::count(t3v.begin(), t3v.end(), prev) > 0;
          const bool nT = std::count(t3v.begin(), t3v.end(), nxt) > 0;
          if (pT && nT && std::count(t3v.begin(), t3v.end(), cur) == 0) {
            LL = cur;
            tauL = prev;
            tauB = nxt;
          }
        }
        if (LL < 0) throw WalkError("6-gon T-junctions are not on adjacent sides");
        // remaining corners along the cycle from tauB: BR, UR, TL
        const int p = cyclePos(cyc, tauB);
        const int BR = cyc[(p + 1) % 6], UR = cyc[(p + 2) % 6], TL = cyc[(p + 3) % 6];
        T2Ids ids = walkT2(m, static_cast<int>(f), tauB, tauL, LL, BR, UR, TL);
        bool mir = false;
        lexPick(ids, ids.transposed(), mir);
        if (mir) ids = ids.transposed();
        DetectedNet net;
        net.kind = TNetKind::T2Crossing;
        net.seedFace = static_cast<int>(f);
        TNetT2 t;
        for (int xi = 0; xi < 7; ++xi)
          for (int yi = 0; yi < 7; ++yi)
            if (TNetT2::exists(xi, yi)) t.node[xi][yi] = m.vertices[ids.id[xi][yi]];
        net.net = t;
        net.vertexIds = ids.flat();
        std::set<int> inner(net.vertexIds.begin(), net.vertexIds.end());
        net.footprintFaces = facesTouching(m, inner);
        res.nets.push_back(std::move(net));
      } else if (n == 7) {
        // lone T on one side, facing pair on the other
        std::vector<int> t3v;
        for (int v : m.faces[f])
          if (m.valence(v) == 3 && !m.boundaryVertex(v)) t3v.push_back(v);
        if (t3v.size() != 3) throw WalkError("7-gon without exactly three valence-3 vertices");
        const auto& cyc = m.faces[f];
        int lone = -1;
        for (int v : t3v) {
          const int p = cyclePos(cyc, v);
          const int a = cyc[(p + 1) % 7], b = cyc[(p + 6) % 7];
          const bool aT = std::count(t3v.begin(), t3v.end(), a) > 0;
          const bool bT = std::count(t3v.begin(), t3v.end(), b) > 0;
          if (!aT && !bT) {
            // the facing pair is separated from this one by corners
            int between = 0;
            for (int u : t3v)
              if (u != v) ++between;
            if (between == 2) lone = v;
          }
        }
        if (lone < 0) throw WalkError("7-gon structure not recognized");
        T3Ids ids = walkT3(m, static_cast<int>(f), lone);
        bool mir = false;
        lexPick(ids, ids.mirrored(), mir);
        if (mir) ids = ids.mirrored();
        DetectedNet net;
        net.kind = TNetKind::T3Parallel;
        net.seedFace = static_cast<int>(f);
        TNetT3 t;
        for (int r = 0; r < 3; ++r) {
          for (int c = 0; c < 7; ++c) t.wide[r][c] = m.vertices[ids.wide[r][c]];
          for (int c = 0; c < 8; ++c) t.narrow[r][c] = m.vertices[ids.narrow[r][c]];
        }
        net.net = t;
        net.vertexIds = ids.flat();
        std::set<int> inner(net.vertexIds.begin(), net.vertexIds.end());
        net.footprintFaces = facesTouching(m, inner);
        res.nets.push_back(std::move(net));
      } else {
        throw WalkError("face arity outside 4..7");
      }
      res.report.okSeeds.push_back(static_cast<int>(f));
    } catch (const WalkError& e) {
      issue.reason = e.what();
      issue.offending = e.offending;
      res.report.issues.push_back(std::move(issue));
    }
  }

  // separation: footprints must be pairwise disjoint and must not contain
  // another net's seed face
  std::vector<bool> drop(res.nets.size(), false);
  for (size_t a = 0; a < res.nets.size(); ++a)
    for (size_t b = a + 1; b < res.nets.size(); ++b) {
      const auto& fa = res.nets[a].footprintFaces;
      const auto& fb = res.nets[b].footprintFaces;
      std::set<int> sa(fa.begin(), fa.end());
      bool overlap = false;
      for (int f : fb)
        if (sa.count(f)) overlap = true;
      if (overlap) {
        drop[a] = drop[b] = true;
        SeparationIssue is;
        is.seedFace = res.nets[a].seedFace;
        is.reason = "net footprints overlap";
        is.offending = {res.nets[a].seedFace, res.nets[b].seedFace};
        res.report.issues.push_back(is);
      }
    }
  DetectResult final;
  final.report.issues = res.report.issues;
  for (size_t a = 0; a < res.nets.size(); ++a) {
    if (!drop[a]) {
      final.report.okSeeds.push_back(res.nets[a].seedFace);
      final.nets.push_back(std::move(res.nets[a]));
    }
  }
  return final;
}

std::array<Vec3, 18> extractInnerNodes(const DetectedNet& net) {
  if (net.kind != TNetKind::T1)
    throw std::domain_error("extractInnerNodes: net is not an isolated T-junction");
  return std::get<TNetT1>(net.net).innerNodes();
}

}  // namespace gts
