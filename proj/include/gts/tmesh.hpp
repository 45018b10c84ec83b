#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gts/tnet.hpp"

namespace gts {

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quad-dominant manifold mesh; non-quad faces (5/6/7-gons) encode the
// T-junction configurations.
struct TMesh {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;

  struct HalfEdge {
    int from = -1, to = -1;
    int face = -1;
    int next = -1;
    int twin = -1;  // -1 on boundary
  };
  std::vector<HalfEdge> he;
  std::vector<int> vertexEdge;  // one outgoing half-edge per vertex
  bool adjacencyBuilt = false;

  int valence(int v) const;
  bool boundaryVertex(int v) const;
  int findHalfEdge(int from, int to) const;
  int countBoundaryLoops() const;
};

// Builds the half-edge structure; throws StructuralError (naming the edge)
// on non-manifold or inconsistently oriented input.
void buildAdjacency(TMesh& m);

struct DetectedNet {
  TNetKind kind = TNetKind::T1;
  int seedFace = -1;
  std::variant<TNetT1, TNetT2, TNetT3> net;
  // canonical slot -> mesh vertex id, same order as the kind's node
  // enumeration (orientation frame)
  std::vector<int> vertexIds;
  std::vector<int> footprintFaces;
};

struct SeparationIssue {
  int seedFace = -1;
  std::string reason;
  std::vector<int> offending;  // vertex or face ids involved
};

struct SeparationReport {
  // every non-quad face lands in exactly one of the two lists
  std::vector<int> okSeeds;
  std::vector<SeparationIssue> issues;
  bool allOk() const { return issues.empty(); }
};

struct DetectResult {
  std::vector<DetectedNet> nets;
  SeparationReport report;
};

DetectResult detectTNets(const TMesh& m);

// The 18 interior nodes of a detected T1 net in stencil order.
std::array<Vec3, 18> extractInnerNodes(const DetectedNet& net);

}  // namespace gts
