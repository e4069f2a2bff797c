#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "isotet/harness.hpp"
#include "isotet/io.hpp"
#include "isotet/mesh.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

void print_report(const isotet::VerificationReport& r) {
  std::printf("%-9s %s  trials=%d failures=%d max_residual=%.3e %s\n", r.suite_id.c_str(),
              r.passed ? "PASS" : "FAIL", r.trials, r.failures, r.max_residual,
              r.residual_unit.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isogonal conjugation in tetrahedra: verification, conjugates, meshes"};
  app.require_subcommand(1);

  isotet::TrialConfig cfg;
  std::string suite, json_path;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run randomized verification suites");
  verify->add_option("--suite", suite, "Suite id or 'all'")->required();
  verify->add_option("--trials", cfg.trials, "Trials per suite")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Master seed");
  verify->add_option("--tol-pos", cfg.tol_pos, "Positional tolerance, relative to R");
  verify->add_option("--tol-ang", cfg.tol_ang, "Angular tolerance, radians");
  verify->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  verify->add_option("--jobs", jobs, "Worker threads (0 = hardware)");

  std::string tet_path, point_text;
  bool as_json = false;
  auto* conj = app.add_subcommand("conjugate", "Isogonal conjugate of a point");
  conj->add_option("--tet", tet_path, "Tetrahedron JSON file")->required();
  conj->add_option("--point", point_text, "x,y,z")->required();
  conj->add_flag("--json", as_json, "Print JSON");

  std::string surface, params_text, out_path;
  double extent = 1.0;
  int res = 2;
  auto* mesh = app.add_subcommand("mesh", "Export a surface mesh");
  mesh->add_option("--surface", surface, "hpa, hpb, hpc or circumsphere")->required();
  mesh->add_option("--params", params_text, "a,b,c")->required();
  mesh->add_option("--extent", extent, "Half-width of the parameter square")->required();
  mesh->add_option("--res", res, "Grid vertices per side")->required();
  mesh->add_option("--out", out_path, "Output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
      std::vector<isotet::VerificationReport> reports;
      if (suite == "all")
        reports = isotet::run_all_suites(cfg, jobs);
      else
        reports.push_back(isotet::run_suite(suite, cfg, jobs));
      bool all_passed = true;
      for (const auto& r : reports) all_passed = all_passed && r.passed;
      const std::string json = suite == "all" ? isotet::reports_json(reports)
                                              : isotet::report_json(reports.front());
      if (json_path == "-") {
        std::cout << json;
      } else {
        for (const auto& r : reports) print_report(r);
        if (!json_path.empty()) write_file(json_path, json);
      }
      return all_passed ? 0 : 1;
    }
    if (*conj) {
      const auto t = isotet::parse_tetrahedron(read_file(tet_path));
      const auto r = isotet::isogonal_conjugate(t, isotet::parse_triple(point_text));
      std::cout << (as_json ? isotet::conjugate_json(r) : isotet::conjugate_text(r));
      return 0;
    }
    const isotet::Vec3 p = isotet::parse_triple(params_text);
    write_file(out_path, isotet::export_mesh(isotet::parse_surface(surface),
                                             isotet::IsoscelesParams::make(p.x, p.y, p.z),
                                             extent, res));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
