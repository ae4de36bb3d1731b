// CSV serialization for grid fields and monitor series.  Field files carry
// the grid in a header comment and one node per row (coordinates first,
// then samples, complex values as re/im pairs) printed with %.17g so a
// write/read round trip is bit exact.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "madlab/grid.hpp"

namespace madlab {

void write_scalar_csv(std::ostream& os, const ScalarField& f,
                      const std::string& value_name = "value");
void write_complex_csv(std::ostream& os, const ComplexField& f,
                       const std::string& value_name = "value");
void write_vector_csv(std::ostream& os, const VectorField& f,
                      const std::string& value_name = "value");

ScalarField read_scalar_csv(std::istream& is);
ComplexField read_complex_csv(std::istream& is);
VectorField read_vector_csv(std::istream& is);

// time series table: first column time, one column per named series
void write_series_csv(std::ostream& os, const std::vector<double>& times,
                      const std::vector<std::string>& names,
                      const std::vector<std::vector<double>>& series);

struct SeriesTable {
  std::vector<double> times;
  std::vector<std::string> names;
  std::vector<std::vector<double>> series;
};
SeriesTable read_series_csv(std::istream& is);

// helpers bound to paths; throw std::runtime_error on I/O failure
void save_scalar_csv(const std::string& path, const ScalarField& f,
                     const std::string& value_name = "value");
void save_complex_csv(const std::string& path, const ComplexField& f,
                      const std::string& value_name = "value");
void save_vector_csv(const std::string& path, const VectorField& f,
                     const std::string& value_name = "value");
ScalarField load_scalar_csv(const std::string& path);
ComplexField load_complex_csv(const std::string& path);
VectorField load_vector_csv(const std::string& path);

}  // namespace madlab
