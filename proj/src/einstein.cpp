#include "einstein.hpp"

#include <algorithm>
#include <cstdio>

namespace gyro {

Velocity einstein_add(const Velocity& u, const Velocity& v,
                      EinsteinVariant variant) {
  if (u.c() != v.c())
    fail(errc::mismatched_c, "operands live in balls of different radius (" +
                                 std::to_string(u.c()) + " vs " +
                                 std::to_string(v.c()) + ")");
  const double c2 = u.c() * u.c();
  const double uv = u.vec().dot(v.vec());
  const double gu = gamma_factor(u);
  const double gden =
      variant == EinsteinVariant::gamma_u ? gu : gamma_factor(v);
  const double k = 1.0 / (1.0 + uv / c2);
  Vec3 w = k * (u.vec() + (1.0 / gu) * v.vec() +
                ((gu / (1.0 + gden)) * (uv / c2)) * u.vec());
  return Velocity(w, u.c());
}

double EinsteinGyrogroup::residual(const Element& a, const Element& b) const {
  auto comp = [](double l, double r) {
    return std::abs(l - r) / (1.0 + std::abs(r));
  };
  return std::max({comp(a.vec().x, b.vec().x), comp(a.vec().y, b.vec().y),
                   comp(a.vec().z, b.vec().z)});
}

std::string EinsteinGyrogroup::format(const Element& a) const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g)", a.vec().x,
                a.vec().y, a.vec().z);
  return buf;
}

}  // namespace gyro
