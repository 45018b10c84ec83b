#pragma once

#include <string>
#include <vector>

#include "gts/bezier.hpp"

namespace gts {

// Polynomials a(u), b(u) of the reparameterization (u + b(u)v, a(u)v)
// linking two patches across a shared edge; BB coefficients, degree <= 2.
struct Reparameterization {
  ScalarPoly a{1.0};
  ScalarPoly b{0.0};

  bool positiveA() const {
    for (double c : a)
      if (c <= 0.0) return false;  // positive BB coefficients suffice
    return true;
  }
};

enum class JoinClass : uint8_t { C2, C1Beta, G1Rho, CapInternalC1, CapInternalC2 };

// One shared edge. Travel runs from patch `from` across the edge into
// patch `to`; `reversed` flags an edge whose own parameter runs against
// the join's common parameter.
struct EdgeRef {
  int patch = -1;
  PatchEdge edge = PatchEdge::Vmin;
  bool reversed = false;
};

struct Join {
  EdgeRef from, to;
  JoinClass cls = JoinClass::C2;
  double beta = 1.0;        // C1Beta (and CapInternal: beta of the C1 part)
  Reparameterization rho;   // G1Rho
};

struct GTSurface {
  std::vector<std::string> names;
  std::vector<BBPatch> patches;
  std::vector<Join> joins;
  std::vector<std::string> provenance;  // per patch: source net / region tag

  int addPatch(const std::string& name, BBPatch p, const std::string& prov) {
    names.push_back(name);
    patches.push_back(std::move(p));
    provenance.push_back(prov);
    return static_cast<int>(patches.size()) - 1;
  }
  int find(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }
  double bbox() const {
    AABB box;
    for (const auto& p : patches)
      for (const auto& c : p.coeffs) box.grow(c);
    return box.diagonal();
  }
};

}  // namespace gts
