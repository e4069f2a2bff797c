#include "isotet/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "suites.hpp"

namespace isotet {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

void TrialConfig::validate() const {
  if (trials < 1) throw GeometryError(ErrorCode::BadInput, "trials must be >= 1");
  if (!(param_lo > 0.0 && param_hi >= param_lo))
    throw GeometryError(ErrorCode::BadInput, "param range must satisfy 0 < lo <= hi");
  if (!(tol_pos > 0.0 && tol_ang > 0.0))
    throw GeometryError(ErrorCode::BadInput, "tolerances must be positive");
}

TrialRng::TrialRng(std::uint64_t seed, std::string_view stream, std::uint64_t index)
    : engine_(splitmix64(splitmix64(seed ^ fnv1a(stream)) + index)) {}

double TrialRng::uniform() {
  // 53 random mantissa bits; std::uniform_real_distribution is not portable.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double TrialRng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec3 TrialRng::unit_vector() {
  for (;;) {
    const Vec3 v{normal(), normal(), normal()};
    const double n = norm(v);
    if (n > 1e-6) return v / n;
  }
}

Vec3 TrialRng::in_box(double half_width) {
  return {uniform(-half_width, half_width), uniform(-half_width, half_width),
          uniform(-half_width, half_width)};
}

Vec3 TrialRng::in_ball(double radius) {
  return unit_vector() * (radius * std::cbrt(uniform()));
}

RigidMotion random_rigid_motion(TrialRng& rng) {
  const double w = rng.normal(), x = rng.normal(), y = rng.normal(), z = rng.normal();
  return {Mat3::from_quaternion(w, x, y, z), rng.in_box(5.0)};
}

std::pair<Tetrahedron, CanonicalFrame> gen_isosceles(TrialRng& rng, const TrialConfig& cfg) {
  const double a = rng.sign() * rng.uniform(cfg.param_lo, cfg.param_hi);
  const double b = rng.sign() * rng.uniform(cfg.param_lo, cfg.param_hi);
  const double c = rng.sign() * rng.uniform(cfg.param_lo, cfg.param_hi);
  const RigidMotion m = random_rigid_motion(rng);
  const CanonicalFrame frame{IsoscelesParams::make(a, b, c), m.rotation, m.translation};
  return {posed_tetrahedron(frame), frame};
}

Vec3 gen_point_on_sphere(TrialRng& rng, const Sphere& s) {
  return s.center + rng.unit_vector() * s.radius;
}

Tetrahedron gen_general_tetrahedron(TrialRng& rng) {
  const double scale = rng.uniform(0.5, 3.0);
  for (;;) {
    const Vec3 a = rng.in_box(scale), b = rng.in_box(scale), c = rng.in_box(scale),
               d = rng.in_box(scale);
    const double l = max_pairwise_distance({a, b, c, d});
    const double quality = std::abs(triple(b - a, c - a, d - a)) / std::sqrt(2.0) / (l * l * l);
    if (quality < 0.1) continue;
    const RigidMotion m = random_rigid_motion(rng);
    return {m.apply(a), m.apply(b), m.apply(c), m.apply(d)};
  }
}

std::span<const std::string_view> suite_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const auto& s : detail::suite_table()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

VerificationReport run_suite(std::string_view suite_id, const TrialConfig& cfg, unsigned workers) {
  cfg.validate();
  const auto& table = detail::suite_table();
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const detail::Suite& s) { return s.id == suite_id; });
  if (it == table.end()) throw GeometryError(ErrorCode::UnknownSuite, std::string(suite_id));

  const auto n = static_cast<std::size_t>(cfg.trials);
  std::vector<detail::TrialOutcome> outcomes(n);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride) {
      TrialRng rng(cfg.seed, it->id, i);
      try {
        outcomes[i] = it->trial(rng, cfg, i);
      } catch (const std::exception&) {
        outcomes[i] = {0.0, true};
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  VerificationReport report{std::string(it->id), cfg.trials, 0, 0.0, std::string(it->unit),
                            cfg.seed, false};
  for (const auto& o : outcomes) {
    if (o.failed) ++report.failures;
    report.max_residual = std::max(report.max_residual, o.residual);
  }
  report.passed = report.failures == 0;
  return report;
}

std::vector<VerificationReport> run_all_suites(const TrialConfig& cfg, unsigned workers) {
  std::vector<VerificationReport> out;
  for (auto id : suite_ids()) out.push_back(run_suite(id, cfg, workers));
  return out;
}

}  // namespace isotet
