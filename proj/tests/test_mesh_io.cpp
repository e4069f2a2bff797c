#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "isotet/io.hpp"
#include "isotet/mesh.hpp"
#include "isotet/quadric.hpp"
#include "json.hpp"

using namespace isotet;

namespace {

template <class F>
void expect_code(F&& f, ErrorCode code) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
};

Mesh parse_mesh(const std::string& text) {
  Mesh m;
  std::istringstream in(text);
  std::string tag;
  while (in >> tag) {
    if (tag == "v") {
      Vec3 v;
      in >> v.x >> v.y >> v.z;
      m.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<int, 3> f{};
      in >> f[0] >> f[1] >> f[2];
      m.faces.push_back(f);
    } else {
      ADD_FAILURE() << "unexpected tag " << tag;
      break;
    }
  }
  return m;
}

const IsoscelesParams k123 = IsoscelesParams::make(1, 2, 3);

struct CommandResult {
  int status;
  std::string output;
};

CommandResult run(const std::string& args) {
  const std::string cmd = std::string(ISOTET_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("isotet_test_" + name);
}

}  // namespace

TEST(ExportMesh, HpcGrid) {
  const Mesh m = parse_mesh(export_mesh(Surface::HpC, k123, 1.0, 3));
  ASSERT_EQ(m.vertices.size(), 9u);
  EXPECT_EQ(m.faces.size(), 8u);
  bool found = false;
  for (const Vec3& v : m.vertices) {
    EXPECT_NEAR(v.z, -1.5 * v.x * v.y, 1e-15);
    if (v.x == 1.0 && v.y == 1.0) {
      found = true;
      EXPECT_DOUBLE_EQ(v.z, -1.5);
    }
  }
  EXPECT_TRUE(found);
  for (const auto& f : m.faces)
    for (int k : f) {
      EXPECT_GE(k, 1);
      EXPECT_LE(k, 9);
    }
}

TEST(ExportMesh, HpcExtentTwo) {
  const Mesh m = parse_mesh(export_mesh(Surface::HpC, k123, 2.0, 3));
  ASSERT_EQ(m.vertices.size(), 9u);
  EXPECT_EQ(m.faces.size(), 8u);
  const auto corner = std::find_if(m.vertices.begin(), m.vertices.end(),
                                   [](const Vec3& v) { return v.x == 2.0 && v.y == 2.0; });
  ASSERT_NE(corner, m.vertices.end());
  EXPECT_DOUBLE_EQ(corner->z, -6.0);
}

TEST(ExportMesh, MinimalAndOtherAxes) {
  const Mesh m = parse_mesh(export_mesh(Surface::HpA, k123, 1.5, 2));
  EXPECT_EQ(m.vertices.size(), 4u);
  EXPECT_EQ(m.faces.size(), 2u);
  const CanonicalFrame frame = CanonicalFrame::identity(k123);
  for (Surface s : {Surface::HpA, Surface::HpB, Surface::HpC}) {
    const Axis ax = s == Surface::HpA ? Axis::A : (s == Surface::HpB ? Axis::B : Axis::C);
    for (const Vec3& v : parse_mesh(export_mesh(s, k123, 1.7, 6)).vertices)
      EXPECT_NEAR(hpar_residual(hpar(frame, ax), v), 0.0, 1e-14);
  }
}

TEST(ExportMesh, Circumsphere) {
  const Mesh m = parse_mesh(export_mesh(Surface::Circumsphere, k123, 1.0, 5));
  EXPECT_EQ(m.vertices.size(), 6u * 25u);
  EXPECT_EQ(m.faces.size(), 6u * 16u * 2u);
  for (const Vec3& v : m.vertices) EXPECT_NEAR(norm(v), std::sqrt(14.0), 1e-12);
}

TEST(ExportMesh, BadInput) {
  expect_code([] { export_mesh(Surface::HpC, k123, 1.0, 1); }, ErrorCode::BadInput);
  expect_code([] { export_mesh(Surface::HpC, k123, 0.0, 3); }, ErrorCode::BadInput);
  expect_code([] { parse_surface("hpd"); }, ErrorCode::BadSurfaceId);
  EXPECT_EQ(parse_surface("circumsphere"), Surface::Circumsphere);
  EXPECT_EQ(parse_surface("hpb"), Surface::HpB);
}

TEST(Io, ParseTetrahedron) {
  const Tetrahedron t = parse_tetrahedron(R"({"params": [1, 2, 3]})");
  EXPECT_NEAR(distance(t.A(), {-1, 2, 3}), 0.0, 1e-15);
  const Tetrahedron u =
      parse_tetrahedron(R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]]})");
  EXPECT_NEAR(distance(u.D(), {0, 0, 1}), 0.0, 1e-15);
  for (const char* bad : {"{", R"({"params": [1, 2]})", R"({"vertices": [[0,0,0]]})", "[]",
                          R"({"params": ["a", 2, 3]})"})
    expect_code([&] { parse_tetrahedron(bad); }, ErrorCode::BadInput);
}

TEST(Io, ParseTriple) {
  const Vec3 p = parse_triple("1.5,-2,3e-1");
  EXPECT_EQ(p.x, 1.5);
  EXPECT_EQ(p.y, -2.0);
  EXPECT_EQ(p.z, 0.3);
  for (const char* bad : {"1,2", "1,2,3,4", "a,b,c", ""})
    expect_code([&] { parse_triple(bad); }, ErrorCode::BadInput);
}

TEST(Io, ReportJsonKeyOrder) {
  const VerificationReport r{"T3.1", 10, 0, 1.25e-13, "radians", 42, true};
  const auto j = nlohmann::ordered_json::parse(report_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"suite", "trials", "failures", "max_residual",
                                            "residual_unit", "seed", "passed"}));
  EXPECT_EQ(j["max_residual"].get<double>(), 1.25e-13);
  EXPECT_TRUE(nlohmann::json::parse(reports_json({r, r})).is_array());
}

TEST(Io, ConjugateJson) {
  const auto j = nlohmann::json::parse(conjugate_json(FinitePoint{{1, 2, 3}}));
  EXPECT_EQ(j["kind"], "finite");
  EXPECT_EQ(j["point"][2], 3.0);
  EXPECT_EQ(nlohmann::json::parse(conjugate_json(VertexDegenerate{Vertex::C}))["vertex"], "C");
  EXPECT_EQ(nlohmann::json::parse(conjugate_json(OnEdgeLine{{Vertex::A, Vertex::D}}))["edge"], "AD");
  EXPECT_EQ(nlohmann::json::parse(conjugate_json(AtInfinity{{0, 0, 1}}))["kind"], "infinite");
}

TEST(Cli, VerifyConjugateMesh) {
  const auto verify = run("verify --suite T6.1 --trials 50");
  EXPECT_EQ(verify.status, 0) << verify.output;
  EXPECT_NE(verify.output.find("PASS"), std::string::npos);

  const auto json = run("verify --suite P5.1 --trials 20 --seed 7 --json -");
  EXPECT_EQ(json.status, 0);
  const auto j = nlohmann::json::parse(json.output);
  EXPECT_EQ(j["suite"], "P5.1");
  EXPECT_EQ(j["seed"], 7);

  EXPECT_EQ(run("verify --suite bogus").status, 2);

  const auto tet = temp_path("tet.json");
  std::ofstream(tet) << R"({"params": [1, 2, 3]})";
  const auto conj = run("conjugate --tet " + tet.string() + " --point 0.4,-0.3,0.18 --json");
  EXPECT_EQ(conj.status, 0) << conj.output;
  const auto c = nlohmann::json::parse(conj.output);
  EXPECT_EQ(c["kind"], "finite");
  EXPECT_NEAR(c["point"][0].get<double>(), -0.4, 1e-12);
  const auto edge = run("conjugate --tet " + tet.string() + " --point 1,0,0 --json");
  EXPECT_EQ(nlohmann::json::parse(edge.output)["edge"], "BC");

  const auto obj = temp_path("hpc.obj");
  const auto mesh = run("mesh --surface hpc --params 1,2,3 --extent 1 --res 3 --out " + obj.string());
  EXPECT_EQ(mesh.status, 0) << mesh.output;
  std::ifstream in(obj);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), export_mesh(Surface::HpC, k123, 1.0, 3));
  EXPECT_EQ(run("mesh --surface nope --params 1,2,3 --extent 1 --res 3 --out " + obj.string()).status, 2);
  std::filesystem::remove(tet);
  std::filesystem::remove(obj);
}
