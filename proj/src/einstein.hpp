#ifndef GYRO_EINSTEIN_HPP
#define GYRO_EINSTEIN_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "error.hpp"

namespace gyro {

inline constexpr uint64_t kDefaultSeed = 1729;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(double s, const Vec3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend Vec3 operator*(const Vec3& a, double s) { return s * a; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
};

// A velocity strictly inside the ball of radius c. Construction is the one
// place the ball membership is enforced; every operation that produces a
// Velocity goes through it.
class Velocity {
 public:
  Velocity(const Vec3& v, double c) : v_(v), c_(c) {
    if (!(c > 0.0)) fail(errc::invalid_argument, "ball radius must be positive");
    if (!(v.norm() < c))
      fail(errc::outside_ball, "speed " + std::to_string(v.norm()) +
                                   " is not strictly below c = " +
                                   std::to_string(c));
  }
  static Velocity zero(double c) { return Velocity(Vec3{}, c); }

  const Vec3& vec() const { return v_; }
  double c() const { return c_; }
  double speed() const { return v_.norm(); }
  double beta() const { return v_.norm() / c_; }

 private:
  Vec3 v_;
  double c_;
};

// Which gamma factor sits in the denominator of the quadratic (u.v)u term.
// The axiom suite singles out gamma_u as the form under which the ball is a
// gyrogroup; gamma_v is kept selectable so the comparison can be rerun.
enum class EinsteinVariant { gamma_u, gamma_v };

// 1/sqrt(1 - |u|^2/c^2), computed as 1/sqrt((1-b)(1+b)) to stay accurate
// near the boundary.
inline double gamma_factor(const Velocity& u) {
  double b = u.beta();
  return 1.0 / std::sqrt((1.0 - b) * (1.0 + b));
}

Velocity einstein_add(const Velocity& u, const Velocity& v,
                      EinsteinVariant variant = EinsteinVariant::gamma_u);

struct EinsteinConfig {
  double c = 1.0;
  double tol = 1e-9;
  double max_beta = 0.99;
  uint64_t seed = kDefaultSeed;

  void validate() const {
    if (!(c > 0.0)) fail(errc::invalid_argument, "c must be positive");
    if (!(tol > 0.0))
      fail(errc::tolerance_not_positive, "tol must be positive");
    if (!(max_beta > 0.0 && max_beta < 1.0))
      fail(errc::invalid_argument, "max_beta must lie in (0, 1)");
  }
};

// The ball of radius c under Einstein addition, wrapped as a generic
// carrier so the identity suites run unchanged.
class EinsteinGyrogroup {
 public:
  using Element = Velocity;
  static constexpr bool exact = false;

  explicit EinsteinGyrogroup(EinsteinConfig cfg,
                             EinsteinVariant variant = EinsteinVariant::gamma_u)
      : cfg_(cfg), variant_(variant) {
    cfg_.validate();
  }

  Element add(const Element& a, const Element& b) const {
    return einstein_add(a, b, variant_);
  }
  Element neg(const Element& a) const { return Velocity(-a.vec(), a.c()); }
  Element zero() const { return Velocity::zero(cfg_.c); }

  // Componentwise |lhs - rhs| <= tol * (1 + |rhs|).
  bool approx_eq(const Element& a, const Element& b, double tol) const {
    return residual(a, b) <= tol;
  }
  double residual(const Element& a, const Element& b) const;
  std::string format(const Element& a) const;

  const EinsteinConfig& config() const { return cfg_; }
  EinsteinVariant variant() const { return variant_; }

 private:
  EinsteinConfig cfg_;
  EinsteinVariant variant_;
};

// Deterministic velocity stream: uniform direction on the sphere, speed
// uniform in [0, max_beta * c). The engine state is the explicit stream
// state; independent samplers never share it.
class VelocitySampler {
 public:
  explicit VelocitySampler(const EinsteinConfig& cfg)
      : cfg_(cfg), rng_(cfg.seed) {
    cfg_.validate();
  }

  Velocity operator()() {
    double zc = 2.0 * next_unit() - 1.0;
    double phi = 2.0 * kPi * next_unit();
    double s = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    Vec3 dir{s * std::cos(phi), s * std::sin(phi), zc};
    double speed = next_unit() * cfg_.max_beta * cfg_.c;
    return Velocity(speed * dir, cfg_.c);
  }

  Vec3 unit_direction() {
    double zc = 2.0 * next_unit() - 1.0;
    double phi = 2.0 * kPi * next_unit();
    double s = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    return {s * std::cos(phi), s * std::sin(phi), zc};
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  // 53 uniform bits; identical across platforms for a given seed.
  double next_unit() { return (double)(rng_() >> 11) * 0x1.0p-53; }

  EinsteinConfig cfg_;
  std::mt19937_64 rng_;
};

}  // namespace gyro

#endif
