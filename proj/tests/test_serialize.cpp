#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include <json.hpp>

#include "hc2/serialize.hpp"
#include "support/generators.hpp"

using hc2::Complex;
using hc2::HullClass;
using hc2::HullTag;
using hc2::HVector;
using hc2::ProjPoint;
using gen::hv;

namespace {

// structural errors must be plain runtime_error, not kernel errors
template <class F>
void check_parse_error(F&& f) {
  try {
    f();
    FAIL("expected a parse error");
  } catch (const hc2::Error&) {
    FAIL("kernel error where a parse error was expected");
  } catch (const std::runtime_error&) {
  }
}

}  // namespace

TEST_CASE("number formatting is stable and faithful") {
  CHECK(hc2::fmt_num(0.5) == "0.5");
  CHECK(hc2::fmt_num(0.0) == "0");
  CHECK(hc2::fmt_num(-0.0) == "0");
  CHECK(hc2::fmt_num(3.0) == "3");
  CHECK(hc2::fmt_num(-17.25) == "-17.25");
  CHECK(hc2::fmt_num(0.549306144334055) == "0.549306144334055");
  CHECK(hc2::fmt_num(std::nan("")) == "null");
  CHECK(hc2::fmt_num(INFINITY) == "null");

  std::mt19937_64 rng(31);
  for (int k = 0; k < 2000; ++k) {
    double x = std::ldexp(gen::uniform(rng, -1.0, 1.0),
                          static_cast<int>(rng() % 81) - 40);
    double back = std::stod(hc2::fmt_num(x));
    CHECK(std::abs(back - x) <= 1e-14 * std::abs(x));
  }
}

TEST_CASE("vectors survive the wire") {
  HVector v = hv(Complex(1.0, -0.25), Complex(0.0, 0.5), 0.125);
  HVector back = hc2::parse_hvector(hc2::json_hvector(v));
  for (int c = 0; c < 3; ++c) CHECK(back[c] == v[c]);

  nlohmann::json j = nlohmann::json::parse(hc2::json_hvector(v));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  for (int c = 0; c < 3; ++c) {
    REQUIRE(j[c].is_array());
    REQUIRE(j[c].size() == 2);
    CHECK(j[c][0].get<double>() == v[c].real());
    CHECK(j[c][1].get<double>() == v[c].imag());
  }

  check_parse_error([] { hc2::parse_hvector("[[1,0],[0,0]]"); });
  check_parse_error([] { hc2::parse_hvector("[[1,0],[0,0],[0]]"); });
  check_parse_error([] { hc2::parse_hvector("[[1,0],[0,0],[\"x\",0]]"); });
  check_parse_error([] { hc2::parse_hvector("[1,0,0]"); });
  check_parse_error([] { hc2::parse_hvector("not json"); });
}

TEST_CASE("scene parsing fills defaults and rejects junk") {
  hc2::Scene s = hc2::parse_scene(
      "{\"points\":[[[1,0],[0,0],[0,0]],[[1,0],[0.5,0],[0,0]]]}");
  CHECK(s.points.size() == 2);
  CHECK(s.seed == 42);
  CHECK(s.points[1][1] == Complex(0.5, 0.0));

  hc2::Scene seeded =
      hc2::parse_scene("{\"points\":[],\"seed\":7}");
  CHECK(seeded.seed == 7);
  CHECK(seeded.points.empty());

  check_parse_error([] { hc2::parse_scene("[1,2,3]"); });
  check_parse_error([] { hc2::parse_scene("{\"seed\":3}"); });
  check_parse_error([] { hc2::parse_scene("{\"points\":[],\"seed\":-1}"); });
  check_parse_error([] { hc2::parse_scene("{\"points\":[],\"seed\":1.5}"); });
  check_parse_error([] { hc2::parse_scene("{\"points\":[[1,0,0]]}"); });
  check_parse_error([] { hc2::parse_scene("{\"points\""); });
}

TEST_CASE("hull reports carry the witness shape of their tag") {
  ProjPoint p = hc2::canonicalize(hv(1, 0, 0));
  ProjPoint q = hc2::canonicalize(hv(1, 0.5, 0));

  auto shape = [](const std::vector<ProjPoint>& pts) {
    return nlohmann::json::parse(hc2::json_hull(hc2::hull_classify(pts)));
  };

  nlohmann::json none = shape({});
  CHECK(none["tag"] == "Empty");
  CHECK(none["witness"].is_null());

  nlohmann::json point = shape({p});
  CHECK(point["tag"] == "Point");
  REQUIRE(point["witness"].is_object());
  CHECK(point["witness"]["point"].size() == 3);

  nlohmann::json line = shape({p, q});
  CHECK(line["tag"] == "Geodesic");
  CHECK(line["witness"].contains("v1"));
  CHECK(line["witness"].contains("v2"));

  nlohmann::json complex_line =
      shape({p, q, hc2::canonicalize(hv(1, Complex(0, 0.3), 0))});
  CHECK(complex_line["tag"] == "ComplexGeodesic");
  CHECK(complex_line["witness"]["polar"].size() == 3);

  nlohmann::json plane = shape({p, q, hc2::canonicalize(hv(1, 0, 0.5))});
  CHECK(plane["tag"] == "RealPlane");
  CHECK(plane["witness"]["basis"].size() == 3);

  nlohmann::json whole =
      shape({p, q, hc2::canonicalize(hv(1, Complex(0, 0.3), 0.4))});
  CHECK(whole["tag"] == "Whole");
  CHECK(whole["witness"].is_null());
}

TEST_CASE("oracle reports serialize every field") {
  std::vector<ProjPoint> pts = {hc2::canonicalize(hv(1, 0, 0)),
                                hc2::canonicalize(hv(1, 0.5, 0))};
  HullClass claim = hc2::hull_classify(pts);
  hc2::OracleReport rep = hc2::closure_oracle(pts, claim, 300, 11);
  nlohmann::json j = nlohmann::json::parse(hc2::json_oracle(rep));
  CHECK(j["tag"] == "Geodesic");
  CHECK(j["samples"] == 300);
  CHECK(j["max_residual"].is_number());
  CHECK(j["refuted"] == false);
  CHECK(j["refuting_point"].is_null());

  // a refuted audit puts the offending point on the wire
  std::vector<ProjPoint> wide = {pts[0], pts[1],
                                 hc2::canonicalize(hv(1, 0, 0.5))};
  hc2::OracleReport bad = hc2::closure_oracle(wide, claim, 300, 11);
  REQUIRE(bad.refuted);
  nlohmann::json jb = nlohmann::json::parse(hc2::json_oracle(bad));
  CHECK(jb["refuted"] == true);
  CHECK(jb["refuting_point"].size() == 3);
}

TEST_CASE("construction traces list their steps in a fixed order") {
  hc2::Geodesic g = hc2::geodesic_through(hc2::canonicalize(hv(1, 0, 0)),
                                          hc2::canonicalize(hv(1, 0.5, 0)));
  hc2::ConstructionTrace tr = hc2::whole_space_construction(
      g, hc2::canonicalize(hv(1, Complex(0, 0.3), 0.4)));
  nlohmann::json j = nlohmann::json::parse(hc2::json_trace(tr));
  REQUIRE(j.is_array());
  const char* names[] = {"foot",          "v1",
                         "v2",            "u",
                         "v3",            "epsilon",
                         "r",             "alpha",
                         "p_rep",         "v4",
                         "residual_at_p", "residual_at_v4",
                         "pairing_p_v4",  "crossing",
                         "crossing_on_spine", "meridian_phase",
                         "meridian",      "p_on_meridian"};
  REQUIRE(j.size() == std::size(names));
  for (std::size_t i = 0; i < std::size(names); ++i) {
    REQUIRE(j[i].is_array());
    REQUIRE(j[i].size() == 2);
    CHECK(j[i][0] == names[i]);
  }
  CHECK(j[14][1].is_boolean());
  CHECK(j[17][1].is_boolean());
  CHECK(j[5][1].size() == 2);  // epsilon as [re, im]
}

TEST_CASE("emission is representation independent") {
  // Scaling a representative moves the canonical rep by rounding ulps, so
  // cross-representation agreement is numerical; byte equality is only
  // promised for byte-identical inputs.  The phase pivot, though, is exact:
  // the leading coordinate serializes with imaginary part literally 0.
  auto close = [](const std::string& a, const std::string& b) {
    nlohmann::json ja = nlohmann::json::parse(a);
    nlohmann::json jb = nlohmann::json::parse(b);
    for (int c = 0; c < 3; ++c)
      for (int part = 0; part < 2; ++part)
        if (std::abs(ja[c][part].get<double>() -
                     jb[c][part].get<double>()) > 1e-12)
          return false;
    return true;
  };

  std::mt19937_64 rng(37);
  for (int k = 0; k < 50; ++k) {
    HVector raw = hv(1, gen::rand_complex(rng, 0.5), gen::rand_complex(rng, 0.4));
    if (hc2::herm_self(raw) >= -0.05) continue;
    Complex lambda = std::polar(gen::uniform(rng, 0.25, 4.0),
                                gen::uniform(rng, -3.1, 3.1));
    std::string a = hc2::json_point(hc2::canonicalize(raw));
    std::string b = hc2::json_point(hc2::canonicalize(lambda * raw));
    CHECK(close(a, b));
    CHECK(nlohmann::json::parse(a)[0][1].get<double>() == 0.0);
    CHECK(nlohmann::json::parse(b)[0][1].get<double>() == 0.0);
  }

  ProjPoint p = hc2::canonicalize(hv(1, 0.1, 0.2));
  ProjPoint q = hc2::canonicalize(hv(1, -0.3, 0.1));
  ProjPoint p2 = hc2::canonicalize(Complex(0.4, 1.7) * p.rep);
  ProjPoint q2 = hc2::canonicalize(Complex(-2.0, 0.3) * q.rep);
  hc2::Geodesic g1 = hc2::geodesic_through(p, q);
  hc2::Geodesic g2 = hc2::geodesic_through(p2, q2);
  nlohmann::json jg1 = nlohmann::json::parse(hc2::json_geodesic(g1));
  nlohmann::json jg2 = nlohmann::json::parse(hc2::json_geodesic(g2));
  for (const char* v : {"v1", "v2"})
    for (int c = 0; c < 3; ++c)
      for (int part = 0; part < 2; ++part)
        CHECK(std::abs(jg1[v][c][part].get<double>() -
                       jg2[v][c][part].get<double>()) < 1e-12);

  hc2::Bisector b = hc2::bisector_from_spine(hc2::geodesic_through(p, q));
  nlohmann::json jb = nlohmann::json::parse(hc2::json_bisector(b));
  CHECK(jb["spine"].contains("v1"));
  CHECK(jb["u"].size() == 3);

  hc2::TangentVector t = hc2::make_tangent(
      hc2::canonicalize(hv(1, 0, 0)), hv(0, 1, 0));
  nlohmann::json jt = nlohmann::json::parse(hc2::json_tangent(t));
  CHECK(jt["base"].size() == 3);
  CHECK(jt["img"].size() == 3);
}
