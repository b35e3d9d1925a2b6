#pragma once

#include <iosfwd>
#include <vector>

#include "sfw/domain_mesh.hpp"

namespace sfw {

/// Plain-text mesh dump:
///
///   # sfw-mesh v1
///   vertices N        then N lines "x y"
///   cells M           then M lines "a b c"
///   boundary_facets F then F lines "a b"
///   boundary_params F then F lines "vertex theta"
///
/// Numbers are written with 17 significant digits so dumps round-trip.
void write_mesh(std::ostream& os, const DomainMesh& mesh);

struct MeshTables {
  std::vector<Vec2> vertices;
  std::vector<Cell> cells;
  std::vector<Facet> boundary_facets;
  std::vector<std::pair<int, double>> boundary_params;
};

/// Throws Error(parse) naming the offending line.
MeshTables read_mesh(std::istream& is);

}  // namespace sfw
