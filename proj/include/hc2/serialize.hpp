#pragma once

// JSON boundary: scene ingestion and report emission.  Reports are written
// by hand with every scalar through %.15g so identical inputs produce
// byte-identical bytes; the shortest-round-trip formatting of a JSON
// library would tie output to its version.  Parsing is nlohmann::json
// (kept out of this header).

#include <cstdint>
#include <string>
#include <vector>

#include "hc2/classifier.hpp"

namespace hc2 {

struct Scene {
  std::vector<HVector> points;
  std::uint64_t seed = 42;
};

// Structural problems (bad JSON, wrong arity, wrong types) throw
// std::runtime_error; geometric validity is checked later by
// canonicalization.
Scene parse_scene(const std::string& text);
HVector parse_hvector(const std::string& text);

std::string fmt_num(double x);
std::string json_complex(const Complex& z);
std::string json_hvector(const HVector& v);
std::string json_point(const ProjPoint& p);  // canonical representative
std::string json_tangent(const TangentVector& t);
std::string json_geodesic(const Geodesic& g);
std::string json_complex_geodesic(const ComplexGeodesic& f);
std::string json_real_plane(const RealPlane& f);
std::string json_bisector(const Bisector& b);
std::string json_hull(const HullClass& h);
std::string json_oracle(const OracleReport& r);
std::string json_trace(const ConstructionTrace& t);

}  // namespace hc2
