#include "madlab/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace madlab {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_grid_header(std::ostream& os, const GridSpec& g) {
  os << "# grid dim=" << g.dim << " n0=" << g.n[0];
  if (g.dim == 2) os << " n1=" << g.n[1];
  os << " l0=" << fmt(g.length[0]);
  if (g.dim == 2) os << " l1=" << fmt(g.length[1]);
  os << "\n";
}

GridSpec read_grid_header(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# grid ", 0) != 0)
    throw std::runtime_error("field csv: missing grid header");
  int dim = 0, n0 = 0, n1 = 0;
  double l0 = 0.0, l1 = 0.0;
  std::istringstream ss(line.substr(7));
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    std::string key = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    if (key == "dim") dim = std::stoi(val);
    else if (key == "n0") n0 = std::stoi(val);
    else if (key == "n1") n1 = std::stoi(val);
    else if (key == "l0") l0 = std::stod(val);
    else if (key == "l1") l1 = std::stod(val);
  }
  if (dim == 1) return GridSpec(n0, l0);
  if (dim == 2) return GridSpec(n0, n1, l0, l1);
  throw std::runtime_error("field csv: bad grid header");
}

void write_coord_columns(std::ostream& os, const GridSpec& g) {
  os << (g.dim == 2 ? "x,y" : "x");
}

void emit_coords(std::ostream& os, const GridSpec& g, std::size_t i) {
  os << fmt(g.coord(0, i));
  if (g.dim == 2) os << ',' << fmt(g.coord(1, i));
}

// skip coordinate cells, returning the remaining cells of the row
std::vector<double> parse_row(const std::string& line) {
  std::vector<double> cells;
  std::istringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
  return cells;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return is;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

}  // namespace

void write_scalar_csv(std::ostream& os, const ScalarField& f,
                      const std::string& value_name) {
  write_grid_header(os, f.grid);
  write_coord_columns(os, f.grid);
  os << ',' << value_name << "\n";
  for (std::size_t i = 0; i < f.v.size(); ++i) {
    emit_coords(os, f.grid, i);
    os << ',' << fmt(f.v[i]) << "\n";
  }
}

void write_complex_csv(std::ostream& os, const ComplexField& f,
                       const std::string& value_name) {
  write_grid_header(os, f.grid);
  write_coord_columns(os, f.grid);
  os << ',' << value_name << "_re," << value_name << "_im\n";
  for (std::size_t i = 0; i < f.v.size(); ++i) {
    emit_coords(os, f.grid, i);
    os << ',' << fmt(f.v[i].real()) << ',' << fmt(f.v[i].imag()) << "\n";
  }
}

void write_vector_csv(std::ostream& os, const VectorField& f,
                      const std::string& value_name) {
  write_grid_header(os, f.grid);
  write_coord_columns(os, f.grid);
  for (int c = 0; c < f.grid.dim; ++c) os << ',' << value_name << '_' << c;
  os << "\n";
  const std::size_t n = f.grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    emit_coords(os, f.grid, i);
    for (int c = 0; c < f.grid.dim; ++c) os << ',' << fmt(f.at(c, i));
    os << "\n";
  }
}

ScalarField read_scalar_csv(std::istream& is) {
  GridSpec g = read_grid_header(is);
  std::string line;
  std::getline(is, line);  // column names
  ScalarField out(g);
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    if (!std::getline(is, line)) throw std::runtime_error("field csv: truncated");
    auto cells = parse_row(line);
    if (cells.size() != std::size_t(g.dim) + 1)
      throw std::runtime_error("field csv: bad row width");
    out.v[i] = cells.back();
  }
  return out;
}

ComplexField read_complex_csv(std::istream& is) {
  GridSpec g = read_grid_header(is);
  std::string line;
  std::getline(is, line);
  ComplexField out(g);
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    if (!std::getline(is, line)) throw std::runtime_error("field csv: truncated");
    auto cells = parse_row(line);
    if (cells.size() != std::size_t(g.dim) + 2)
      throw std::runtime_error("field csv: bad row width");
    out.v[i] = Complex(cells[cells.size() - 2], cells.back());
  }
  return out;
}

VectorField read_vector_csv(std::istream& is) {
  GridSpec g = read_grid_header(is);
  std::string line;
  std::getline(is, line);
  VectorField out(g);
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(is, line)) throw std::runtime_error("field csv: truncated");
    auto cells = parse_row(line);
    if (cells.size() != std::size_t(2 * g.dim))
      throw std::runtime_error("field csv: bad row width");
    for (int c = 0; c < g.dim; ++c) out.at(c, i) = cells[g.dim + c];
  }
  return out;
}

void write_series_csv(std::ostream& os, const std::vector<double>& times,
                      const std::vector<std::string>& names,
                      const std::vector<std::vector<double>>& series) {
  os << "time";
  for (const auto& n : names) os << ',' << n;
  os << "\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    os << fmt(times[i]);
    for (const auto& s : series) os << ',' << fmt(s.at(i));
    os << "\n";
  }
}

SeriesTable read_series_csv(std::istream& is) {
  SeriesTable t;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("series csv: empty");
  {
    std::istringstream ss(line);
    std::string cell;
    bool first = true;
    while (std::getline(ss, cell, ',')) {
      if (first) first = false;
      else t.names.push_back(cell);
    }
  }
  t.series.resize(t.names.size());
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto cells = parse_row(line);
    if (cells.size() != t.names.size() + 1)
      throw std::runtime_error("series csv: bad row width");
    t.times.push_back(cells[0]);
    for (std::size_t c = 0; c < t.names.size(); ++c)
      t.series[c].push_back(cells[c + 1]);
  }
  return t;
}

void save_scalar_csv(const std::string& path, const ScalarField& f,
                     const std::string& value_name) {
  auto os = open_out(path);
  write_scalar_csv(os, f, value_name);
}
void save_complex_csv(const std::string& path, const ComplexField& f,
                      const std::string& value_name) {
  auto os = open_out(path);
  write_complex_csv(os, f, value_name);
}
void save_vector_csv(const std::string& path, const VectorField& f,
                     const std::string& value_name) {
  auto os = open_out(path);
  write_vector_csv(os, f, value_name);
}
ScalarField load_scalar_csv(const std::string& path) {
  auto is = open_in(path);
  return read_scalar_csv(is);
}
ComplexField load_complex_csv(const std::string& path) {
  auto is = open_in(path);
  return read_complex_csv(is);
}
VectorField load_vector_csv(const std::string& path) {
  auto is = open_in(path);
  return read_vector_csv(is);
}

}  // namespace madlab
