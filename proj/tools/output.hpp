#pragma once

// Serialization for the CLI: JSON with 17-significant-digit numbers and
// "inf" for infinite values, CSV tables, and SVG upper-half-plane figures.

#include <string>
#include <utility>
#include <vector>

#include "aff/problem.hpp"

namespace cli {

std::string format_number(double v);

class JsonObject {
 public:
  JsonObject& number(const std::string& key, double v);
  JsonObject& boolean(const std::string& key, bool v);
  JsonObject& string(const std::string& key, const std::string& v);
  JsonObject& raw(const std::string& key, const std::string& v);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string number_array(const std::vector<double>& vs);

struct CsvColumn {
  std::string name;
  std::vector<double> values;
};
std::string csv_table(const std::vector<CsvColumn>& columns);

// Payload polyline/markers over the decorated half-plane: the absolute
// {y = 0}, the light cone through Id, and for negative curvature the
// frontier ray plus shading of the infinite-distance region.
std::string svg_figure(const aff::ProblemSpec& spec,
                       const std::vector<std::pair<double, double>>& payload, bool markers);

}  // namespace cli
