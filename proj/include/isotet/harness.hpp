#pragma once

// Seeded generators and the randomized verification suites.
//
// Every trial owns an RNG stream derived from (seed, suite id, trial index),
// so a report depends only on its inputs and not on how trials are scheduled
// across workers.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isotet/tetra.hpp"

namespace isotet {

struct TrialConfig {
  std::uint64_t seed = 42;
  int trials = 1000;
  double tol_pos = 1e-8;  // relative to the circumradius
  double tol_ang = 1e-8;  // radians
  double param_lo = 0.3;  // range of |a|, |b|, |c|
  double param_hi = 3.0;

  // Throws BadInput.
  void validate() const;
};

struct VerificationReport {
  std::string suite_id;
  int trials = 0;
  int failures = 0;
  double max_residual = 0.0;
  std::string residual_unit;  // "length/R" or "radians"
  std::uint64_t seed = 0;
  bool passed = false;
};

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::string_view stream, std::uint64_t index);
  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  double sign() { return uniform() < 0.5 ? -1.0 : 1.0; }
  Vec3 unit_vector();
  Vec3 in_box(double half_width);
  Vec3 in_ball(double radius);

 private:
  std::mt19937_64 engine_;
};

// Rotation from a uniform unit quaternion, translation uniform in [-5, 5]^3.
RigidMotion random_rigid_motion(TrialRng& rng);

std::pair<Tetrahedron, CanonicalFrame> gen_isosceles(TrialRng& rng, const TrialConfig& cfg);
// Uniform on the sphere.
Vec3 gen_point_on_sphere(TrialRng& rng, const Sphere& s);
// A random posed tetrahedron with shape quality 6 sqrt(2) V / L^3 >= 0.1.
Tetrahedron gen_general_tetrahedron(TrialRng& rng);

std::span<const std::string_view> suite_ids();

// Throws UnknownSuite. `workers` > 1 spreads trials over threads.
VerificationReport run_suite(std::string_view suite_id, const TrialConfig& cfg,
                             unsigned workers = 1);
std::vector<VerificationReport> run_all_suites(const TrialConfig& cfg, unsigned workers = 1);

}  // namespace isotet
