#include "sfw/mesh_io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sfw/error.hpp"

namespace sfw {

void write_mesh(std::ostream& os, const DomainMesh& mesh) {
  const auto old = os.precision(17);
  os << "# sfw-mesh v1\n";
  os << "vertices " << mesh.vertex_count() << '\n';
  for (const Vec2& v : mesh.vertices()) os << v.x() << ' ' << v.y() << '\n';
  os << "cells " << mesh.cell_count() << '\n';
  for (const Cell& c : mesh.cells()) os << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  os << "boundary_facets " << mesh.boundary_facets().size() << '\n';
  for (const Facet& f : mesh.boundary_facets()) os << f[0] << ' ' << f[1] << '\n';
  const auto& bv = mesh.boundary_vertices();
  os << "boundary_params " << bv.size() << '\n';
  for (std::size_t i = 0; i < bv.size(); ++i) os << bv[i] << ' ' << mesh.boundary_params()[i] << '\n';
  os.precision(old);
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  std::istringstream next() {
    std::string line;
    while (std::getline(is_, line)) {
      ++number_;
      if (!line.empty() && line[0] != '#') return std::istringstream(line);
    }
    fail(ErrorKind::parse, "unexpected end of mesh dump after line " + std::to_string(number_));
  }

  [[noreturn]] void bad(const std::string& what) const {
    fail(ErrorKind::parse, "mesh dump line " + std::to_string(number_) + ": " + what);
  }

  std::size_t header(const std::string& name) {
    auto ss = next();
    std::string word;
    long long count = -1;
    if (!(ss >> word >> count) || word != name || count < 0) bad("expected '" + name + " <count>'");
    return static_cast<std::size_t>(count);
  }

 private:
  std::istream& is_;
  int number_ = 1;  // the header line is consumed by the caller
};

}  // namespace

MeshTables read_mesh(std::istream& is) {
  std::string first;
  if (!std::getline(is, first) || first != "# sfw-mesh v1")
    fail(ErrorKind::parse, "mesh dump line 1: missing '# sfw-mesh v1' header");
  LineReader in(is);
  MeshTables t;
  t.vertices.resize(in.header("vertices"));
  for (auto& v : t.vertices) {
    auto ss = in.next();
    if (!(ss >> v.x() >> v.y())) in.bad("expected two coordinates");
  }
  t.cells.resize(in.header("cells"));
  for (auto& c : t.cells) {
    auto ss = in.next();
    if (!(ss >> c[0] >> c[1] >> c[2])) in.bad("expected three vertex indices");
  }
  t.boundary_facets.resize(in.header("boundary_facets"));
  for (auto& f : t.boundary_facets) {
    auto ss = in.next();
    if (!(ss >> f[0] >> f[1])) in.bad("expected two vertex indices");
  }
  t.boundary_params.resize(in.header("boundary_params"));
  for (auto& p : t.boundary_params) {
    auto ss = in.next();
    if (!(ss >> p.first >> p.second)) in.bad("expected vertex index and angle");
  }
  return t;
}

}  // namespace sfw
