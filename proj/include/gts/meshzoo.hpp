#pragma once

#include "gts/tmesh.hpp"

namespace gts {

// Built-in meshes used by tests, fixtures and the CLI.

TMesh regularGridMesh(int nx, int ny, double spacing = 1.0);

// Single isolated T-junction in a regular surrounding; the flat canonical
// T1 net as a mesh (27 faces, one pentagon).
TMesh t1Mesh();

// Two T-junctions opposite a third (one 7-gon).
TMesh t3Mesh();

// Two T-junctions with crossing directions (one 6-gon).
TMesh t2Mesh();

// A bracelet: closed in one direction, with two spiral strips that halve
// their width per lap. Classical knot-interval propagation forces three
// consecutive strip intervals of the helical band to zero, while the
// GT-construction handles it without knot data. Faithful to the published
// mechanism, approximate in its exact layout.
TMesh braceletMesh();

// A T-mesh admitting a positive knot-interval assignment in which the
// refined half-columns carry 1/2 where the rest carry 1.
TMesh halfIntervalMesh();

// A larger free-form design with two horizontally paired T-junction nets
// whose interval system is again infeasible (best-effort reconstruction).
TMesh pairedTInfeasibleMesh();

}  // namespace gts
