#include "hc2/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace hc2 {

namespace {

Complex read_complex(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::runtime_error("complex entries must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

HVector read_hvector(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::runtime_error("a vector needs exactly three complex entries");
  return HVector{read_complex(j[0]), read_complex(j[1]), read_complex(j[2])};
}

// nlohmann's parse_error does not derive from runtime_error; rewrap so the
// advertised contract (structural problems -> std::runtime_error) holds.
nlohmann::json parse_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(e.what());
  }
}

}  // namespace

Scene parse_scene(const std::string& text) {
  nlohmann::json j = parse_text(text);
  if (!j.is_object())
    throw std::runtime_error("scene must be a JSON object");
  if (!j.contains("points") || !j["points"].is_array())
    throw std::runtime_error("scene needs a points array");
  Scene scene;
  for (const nlohmann::json& entry : j["points"])
    scene.points.push_back(read_hvector(entry));
  if (j.contains("seed")) {
    const nlohmann::json& s = j["seed"];
    if (!s.is_number_integer() || s.get<std::int64_t>() < 0)
      throw std::runtime_error("seed must be a nonnegative integer");
    scene.seed = static_cast<std::uint64_t>(s.get<std::int64_t>());
  }
  return scene;
}

HVector parse_hvector(const std::string& text) {
  return read_hvector(parse_text(text));
}

std::string fmt_num(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) x = 0.0;  // print negative zero as 0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string json_complex(const Complex& z) {
  return "[" + fmt_num(z.real()) + "," + fmt_num(z.imag()) + "]";
}

std::string json_hvector(const HVector& v) {
  return "[" + json_complex(v[0]) + "," + json_complex(v[1]) + "," +
         json_complex(v[2]) + "]";
}

std::string json_point(const ProjPoint& p) { return json_hvector(p.rep); }

std::string json_tangent(const TangentVector& t) {
  return "{\"base\":" + json_hvector(t.base.rep) +
         ",\"img\":" + json_hvector(t.img) + "}";
}

std::string json_geodesic(const Geodesic& g) {
  return "{\"v1\":" + json_hvector(g.v1.rep) +
         ",\"v2\":" + json_hvector(g.v2.rep) + "}";
}

std::string json_complex_geodesic(const ComplexGeodesic& f) {
  return "{\"polar\":" + json_hvector(f.polar.rep) + "}";
}

std::string json_real_plane(const RealPlane& f) {
  return "{\"basis\":[" + json_hvector(f.basis[0]) + "," +
         json_hvector(f.basis[1]) + "," + json_hvector(f.basis[2]) + "]}";
}

std::string json_bisector(const Bisector& b) {
  return "{\"spine\":" + json_geodesic(b.spine) +
         ",\"u\":" + json_hvector(b.polar_u.rep) + "}";
}

std::string json_hull(const HullClass& h) {
  std::string witness = "null";
  switch (h.tag) {
    case HullTag::empty:
    case HullTag::whole:
      break;
    case HullTag::point:
      witness = "{\"point\":" + json_point(std::get<ProjPoint>(h.witness)) + "}";
      break;
    case HullTag::geodesic:
      witness = json_geodesic(std::get<Geodesic>(h.witness));
      break;
    case HullTag::complex_geodesic:
      witness = json_complex_geodesic(std::get<ComplexGeodesic>(h.witness));
      break;
    case HullTag::real_plane:
      witness = json_real_plane(std::get<RealPlane>(h.witness));
      break;
  }
  return std::string("{\"tag\":\"") + hull_tag_name(h.tag) +
         "\",\"witness\":" + witness + "}";
}

std::string json_oracle(const OracleReport& r) {
  std::string refuting =
      r.refuting_point ? json_point(*r.refuting_point) : std::string("null");
  return std::string("{\"tag\":\"") + hull_tag_name(r.tag) +
         "\",\"samples\":" + std::to_string(r.samples_run) +
         ",\"max_residual\":" + fmt_num(r.max_residual) +
         ",\"refuted\":" + (r.refuted ? "true" : "false") +
         ",\"refuting_point\":" + refuting + "}";
}

std::string json_trace(const ConstructionTrace& t) {
  auto entry = [](const char* name, const std::string& value) {
    return std::string("[\"") + name + "\"," + value + "]";
  };
  auto boolean = [](bool b) { return std::string(b ? "true" : "false"); };
  std::string out = "[";
  out += entry("foot", json_point(t.foot));
  out += "," + entry("v1", json_hvector(t.dec.v1));
  out += "," + entry("v2", json_hvector(t.dec.v2));
  out += "," + entry("u", json_hvector(t.dec.u));
  out += "," + entry("v3", json_hvector(t.dec.v3));
  out += "," + entry("epsilon", json_complex(t.dec.epsilon));
  out += "," + entry("r", fmt_num(t.dec.r));
  out += "," + entry("alpha", fmt_num(t.alpha));
  out += "," + entry("p_rep", json_hvector(t.p_rep));
  out += "," + entry("v4", json_hvector(t.v4_rep));
  out += "," + entry("residual_at_p", fmt_num(t.spine_product_im_p));
  out += "," + entry("residual_at_v4", fmt_num(t.spine_product_im_v4));
  out += "," + entry("pairing_p_v4", json_complex(t.pairing_p_v4));
  out += "," + entry("crossing", json_point(t.crossing));
  out += "," + entry("crossing_on_spine", boolean(t.crossing_on_spine));
  out += "," + entry("meridian_phase", json_complex(t.meridian_phase));
  out += "," + entry("meridian", json_real_plane(t.meridian));
  out += "," + entry("p_on_meridian", boolean(t.p_on_meridian));
  out += "]";
  return out;
}

}  // namespace hc2
