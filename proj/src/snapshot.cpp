#include "vvof/snapshot.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vvof {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

const char* bc_name(Boundary b) { return b == Boundary::Periodic ? "periodic" : "neumann"; }

void write_scalars(std::ostream& out, const char* name, const ScalarField& f) {
  out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
  for (std::size_t q = 0; q < f.size(); ++q) out << fmt(f[q]) << '\n';
}

}  // namespace

void write_snapshot(const std::string& path, const ScalarField& c, const ScalarField* kappa,
                    const VectorField* velocity) {
  const Grid& g = c.grid();
  auto out = open_out(path);
  out << "# vtk DataFile Version 3.0\n";
  out << "vvof bc=" << bc_name(g.bc(0)) << ',' << bc_name(g.bc(1)) << ',' << bc_name(g.bc(2)) << '\n';
  out << "ASCII\nDATASET STRUCTURED_POINTS\n";
  out << "DIMENSIONS " << g.nx() + 1 << ' ' << g.ny() + 1 << ' ' << g.nz() + 1 << '\n';
  out << "ORIGIN " << fmt(g.origin()[0]) << ' ' << fmt(g.origin()[1]) << ' ' << fmt(g.origin()[2]) << '\n';
  out << "SPACING " << fmt(g.dx()) << ' ' << fmt(g.dy()) << ' ' << fmt(g.dz()) << '\n';
  out << "CELL_DATA " << g.size() << '\n';
  write_scalars(out, "C", c);
  if (kappa) write_scalars(out, "kappa", *kappa);
  if (velocity) {
    write_scalars(out, "u", velocity->u());
    write_scalars(out, "v", velocity->v());
    write_scalars(out, "w", velocity->w());
  }
  finish(out, path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("'" + path + "': " + why);
  };
  std::string line;
  std::getline(in, line);
  if (line.rfind("# vtk DataFile", 0) != 0) fail("not a legacy VTK file");
  std::string title;
  std::getline(in, title);
  std::array<Boundary, 3> bc{Boundary::ZeroNeumann, Boundary::ZeroNeumann, Boundary::ZeroNeumann};
  if (auto pos = title.find("bc="); pos != std::string::npos) {
    std::stringstream ss(title.substr(pos + 3));
    std::string tok;
    for (int a = 0; a < 3 && std::getline(ss, tok, ','); ++a) {
      bc[a] = tok == "periodic" ? Boundary::Periodic : Boundary::ZeroNeumann;
    }
  }
  std::string word;
  in >> word;
  if (word != "ASCII") fail("only ASCII files are supported");
  in >> word >> word;
  if (word != "STRUCTURED_POINTS") fail("expected STRUCTURED_POINTS");
  int dims[3];
  Vec3 origin, spacing;
  std::size_t ncells = 0;
  in >> word >> dims[0] >> dims[1] >> dims[2];
  if (word != "DIMENSIONS") fail("expected DIMENSIONS");
  in >> word >> origin[0] >> origin[1] >> origin[2];
  if (word != "ORIGIN") fail("expected ORIGIN");
  in >> word >> spacing[0] >> spacing[1] >> spacing[2];
  if (word != "SPACING") fail("expected SPACING");
  in >> word >> ncells;
  if (word != "CELL_DATA") fail("expected CELL_DATA");
  Snapshot snap;
  snap.grid = Grid(dims[0] - 1, dims[1] - 1, dims[2] - 1, spacing, origin, bc);
  if (snap.grid.size() != ncells) fail("CELL_DATA count does not match DIMENSIONS");
  while (in >> word) {
    if (word != "SCALARS") fail("expected SCALARS, got '" + word + "'");
    std::string name, type, lookup, table;
    int ncomp = 1;
    in >> name >> type >> ncomp >> lookup >> table;
    ScalarField f(snap.grid);
    for (std::size_t q = 0; q < ncells; ++q) {
      std::string tok;
      if (!(in >> tok)) fail("truncated data for '" + name + "'");
      f[q] = std::strtod(tok.c_str(), nullptr);
    }
    snap.fields.emplace(name, std::move(f));
  }
  if (!snap.fields.count("C")) fail("missing field 'C'");
  return snap;
}

void write_diagnostics_csv(const std::string& path, const Diagnostics& diag) {
  auto out = open_out(path);
  out << kDiagnosticsHeader << '\n';
  for (const auto& r : diag.rows) {
    out << fmt(r.t) << ',' << fmt(r.volume) << ',' << fmt(r.volume_norm) << ',' << fmt(r.energy) << ','
        << fmt(r.kappa_bar) << ',' << fmt(r.clipped_mass) << ',' << r.wisps << ',' << fmt(r.cfl) << '\n';
  }
  finish(out, path);
}

Diagnostics read_diagnostics_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  std::getline(in, line);
  if (line != kDiagnosticsHeader) throw std::runtime_error("'" + path + "': unexpected header");
  Diagnostics d;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string tok;
    std::vector<std::string> cols;
    while (std::getline(ss, tok, ',')) cols.push_back(tok);
    if (cols.size() != 8) throw std::runtime_error("'" + path + "': expected 8 columns");
    DiagRecord r;
    r.t = std::strtod(cols[0].c_str(), nullptr);
    r.volume = std::strtod(cols[1].c_str(), nullptr);
    r.volume_norm = std::strtod(cols[2].c_str(), nullptr);
    r.energy = std::strtod(cols[3].c_str(), nullptr);
    r.kappa_bar = std::strtod(cols[4].c_str(), nullptr);
    r.clipped_mass = std::strtod(cols[5].c_str(), nullptr);
    r.wisps = std::strtoull(cols[6].c_str(), nullptr, 10);
    r.cfl = std::strtod(cols[7].c_str(), nullptr);
    d.rows.push_back(r);
  }
  return d;
}

void write_contour_csv(const std::string& path, const std::vector<Polyline>& contour) {
  auto out = open_out(path);
  out << "component,x,y\n";
  for (std::size_t q = 0; q < contour.size(); ++q) {
    for (const auto& p : contour[q].points) out << q << ',' << fmt(p[0]) << ',' << fmt(p[1]) << '\n';
  }
  finish(out, path);
}

}  // namespace vvof
