#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "kf/kernel.hpp"
#include "kf/matpoly.hpp"
#include "kf/pairsynth.hpp"
#include "kf/qfunction.hpp"
#include "kf/space.hpp"

namespace kf::io {

using json = nlohmann::json;

json to_json(const GaussianRational& x);
json to_json(const Poly& p);
json to_json(const MatPoly& m);
json to_json(const CMat& m);
json to_json(const BivariateKernel& k);
json to_json(const PontryaginSpace& s);
json to_json(const LinearRelation& r);
json to_json(const RatMat& r);

// Each reader reports SchemaError with the JSON pointer of the offending node.
GaussianRational scalar_from(const json& j, const std::string& at = "");
Poly poly_from(const json& j, const std::string& at = "");
MatPoly matpoly_from(const json& j, const std::string& at = "");
CMat matrix_from(const json& j, const std::string& at = "");
BivariateKernel kernel_from(const json& j, const std::string& at = "");
PontryaginSpace space_from(const json& j, const std::string& at = "");
LinearRelation relation_from(const json& j, const std::string& at = "");

struct ProblemFile {
  std::string kind;  // matpoly, space, kernel, pair, relation, herm
  json payload;

  MatPoly matpoly() const;
  PontryaginSpace space() const;
  BivariateKernel kernel() const;
  NevanlinnaPair pair() const;
  LinearRelation relation() const;
  CMat herm() const;
};

// ParseError with line/column; SchemaError for a missing or unknown kind.
ProblemFile parse_problem(std::istream& in);
ProblemFile parse_problem_file(const std::string& path);

json problem_json(const std::string& kind, json payload);

}  // namespace kf::io
