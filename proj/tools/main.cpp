// Command-line front end.  Subcommands wrap the kernel's classification,
// verification, and metric operations; every report is JSON on stdout with
// numbers printed via the same %.15g formatter as the library, so identical
// inputs give byte-identical output.
//
// Exit codes: 0 all checks pass, 1 verification failure (a failing check or
// a refuted classification), 2 malformed input, 3 domain violation.

#include <algorithm>
#include <cstdio>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hc2/bisector.hpp"
#include "hc2/classifier.hpp"
#include "hc2/errors.hpp"
#include "hc2/flats.hpp"
#include "hc2/geodesic.hpp"
#include "hc2/hermitian.hpp"
#include "hc2/serialize.hpp"
#include "hc2/verification.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <std::size_t N>
std::vector<hc2::ProjPoint> parse_points(const std::array<std::string, N>& args,
                                         const hc2::Tolerance& tol) {
  std::vector<hc2::ProjPoint> pts;
  for (const std::string& a : args)
    pts.push_back(hc2::canonicalize(hc2::parse_hvector(a), tol));
  return pts;
}

int cmd_classify(const std::string& scene_path, const hc2::Tolerance& tol,
                 bool seed_given, std::uint64_t seed, std::size_t samples) {
  hc2::Scene scene = hc2::parse_scene(slurp(scene_path));
  std::uint64_t use_seed = seed_given ? seed : scene.seed;

  std::vector<hc2::ProjPoint> pts;
  for (const hc2::HVector& v : scene.points)
    pts.push_back(hc2::canonicalize(v, tol));

  hc2::HullDetail d = hc2::hull_classify_detailed(pts, tol);
  std::string witness = "null";
  switch (d.hull.tag) {
    case hc2::HullTag::empty:
      break;
    case hc2::HullTag::point:
      witness = "{\"point\":" +
                hc2::json_point(std::get<hc2::ProjPoint>(d.hull.witness)) +
                "}";
      break;
    case hc2::HullTag::geodesic:
      witness = hc2::json_geodesic(std::get<hc2::Geodesic>(d.hull.witness));
      break;
    case hc2::HullTag::complex_geodesic:
      witness = hc2::json_complex_geodesic(
          std::get<hc2::ComplexGeodesic>(d.hull.witness));
      break;
    case hc2::HullTag::real_plane:
      witness =
          hc2::json_real_plane(std::get<hc2::RealPlane>(d.hull.witness));
      break;
    case hc2::HullTag::whole:
      // The trace is a best-effort witness: a spanning configuration can
      // still put the chosen off-point on the complex spine.
      try {
        witness = hc2::json_trace(
            hc2::whole_space_construction(*d.base, *d.off_point, tol));
      } catch (const hc2::Error&) {
        witness = "null";
      }
      break;
  }

  // The audit needs a proper witness to test membership against; Empty and
  // Whole claims have nothing to sample.
  bool audited = d.hull.tag != hc2::HullTag::empty &&
                 d.hull.tag != hc2::HullTag::whole;
  std::string oracle = "null";
  bool refuted = false;
  if (audited) {
    hc2::OracleReport orr =
        hc2::closure_oracle(pts, d.hull, samples, use_seed, tol);
    oracle = hc2::json_oracle(orr);
    refuted = orr.refuted;
  }
  std::printf("{\"tag\":\"%s\",\"witness\":%s,\"oracle\":%s}\n",
              hc2::hull_tag_name(d.hull.tag), witness.c_str(), oracle.c_str());
  return refuted ? 1 : 0;
}

int cmd_verify(const hc2::Tolerance& tol, std::uint64_t seed,
               std::size_t samples) {
  hc2::VerifyOptions opt;
  opt.seed = seed;
  opt.oracle_samples = samples;
  opt.tol = tol;
  std::vector<hc2::CheckRecord> records = hc2::run_verification_suite(opt);
  std::sort(records.begin(), records.end(),
            [](const hc2::CheckRecord& a, const hc2::CheckRecord& b) {
              return a.name < b.name;
            });
  bool all_pass = true;
  for (const hc2::CheckRecord& r : records) {
    std::printf(
        "{\"name\":\"%s\",\"expected\":%s,\"computed\":%s,\"residual\":%s,"
        "\"pass\":%s}\n",
        r.name.c_str(), hc2::fmt_num(r.expected).c_str(),
        hc2::fmt_num(r.computed).c_str(), hc2::fmt_num(r.residual).c_str(),
        r.pass ? "true" : "false");
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical kernel for the complex hyperbolic plane"};
  app.require_subcommand(1);

  std::string scene_path;
  double tolerance = 0.0;
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  app.add_option("--scene", scene_path, "scene JSON file");
  app.add_option("--tolerance", tolerance,
                 "membership tolerance (isotropy 10x, algebraic x/100)");
  CLI::Option* seed_opt =
      app.add_option("--seed", seed, "random seed (overrides the scene's)");
  app.add_option("--samples", samples, "oracle sample budget");

  CLI::App* sub_classify =
      app.add_subcommand("classify", "classify the hull of a scene's points");
  CLI::App* sub_verify =
      app.add_subcommand("verify", "run the closed-form verification suite");
  CLI::App* sub_distance =
      app.add_subcommand("distance", "distance between two points");
  CLI::App* sub_project = app.add_subcommand(
      "project", "project point x onto the geodesic through p and q");
  CLI::App* sub_crossing = app.add_subcommand(
      "crossing",
      "crossing of segment pq with the bisector spined on s1 and s2");

  // One string per point: a vector positional would let the parser expand
  // the [[re,im],...] brackets into separate arguments.
  std::array<std::string, 2> distance_args;
  std::array<std::string, 3> project_args;
  std::array<std::string, 4> crossing_args;
  sub_distance->add_option("p", distance_args[0])->required();
  sub_distance->add_option("q", distance_args[1])->required();
  sub_project->add_option("x", project_args[0])->required();
  sub_project->add_option("p", project_args[1])->required();
  sub_project->add_option("q", project_args[2])->required();
  sub_crossing->add_option("p", crossing_args[0])->required();
  sub_crossing->add_option("q", crossing_args[1])->required();
  sub_crossing->add_option("s1", crossing_args[2])->required();
  sub_crossing->add_option("s2", crossing_args[3])->required();
  for (CLI::App* sub :
       {sub_classify, sub_verify, sub_distance, sub_project, sub_crossing})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  try {
    hc2::Tolerance tol =
        tolerance > 0.0
            ? hc2::Tolerance(10.0 * tolerance, tolerance, tolerance / 100.0)
            : hc2::Tolerance();

    if (sub_classify->parsed()) {
      if (scene_path.empty())
        throw std::runtime_error("classify needs --scene");
      return cmd_classify(scene_path, tol, seed_opt->count() > 0, seed,
                          samples);
    }
    if (sub_verify->parsed()) return cmd_verify(tol, seed, samples);
    if (sub_distance->parsed()) {
      std::vector<hc2::ProjPoint> pts = parse_points(distance_args, tol);
      std::printf("{\"distance\":%s}\n",
                  hc2::fmt_num(hc2::distance(pts[0], pts[1])).c_str());
      return 0;
    }
    if (sub_project->parsed()) {
      std::vector<hc2::ProjPoint> pts = parse_points(project_args, tol);
      hc2::Geodesic g = hc2::geodesic_through(pts[1], pts[2], tol);
      std::printf(
          "{\"point\":%s}\n",
          hc2::json_point(hc2::project_to_geodesic(g, pts[0], tol)).c_str());
      return 0;
    }
    std::vector<hc2::ProjPoint> pts = parse_points(crossing_args, tol);
    hc2::Bisector b = hc2::bisector_from_spine(
        hc2::geodesic_through(pts[2], pts[3], tol), tol);
    hc2::ProjPoint cross = hc2::bisector_crossing(b, pts[0], pts[1], tol);
    std::printf("{\"point\":%s,\"residual\":%s}\n",
                hc2::json_point(cross).c_str(),
                hc2::fmt_num(hc2::bisector_residual(b, cross)).c_str());
    return 0;
  } catch (const hc2::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
}
