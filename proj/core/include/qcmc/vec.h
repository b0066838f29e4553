//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef QCMC_VEC_H_
#define QCMC_VEC_H_

#include <cmath>

namespace qcmc {

// Point in R^3. Planar graphs keep z = 0.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 &operator+=(const Vec3 &o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3 &operator-=(const Vec3 &o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3 &operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3 &a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr bool operator==(const Vec3 &, const Vec3 &) = default;
};

constexpr double dot(const Vec3 &a, const Vec3 &b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

inline double distance(const Vec3 &a, const Vec3 &b) { return norm(a - b); }

// det of the 3x3 matrix with columns a, b, c
constexpr double det3(const Vec3 &a, const Vec3 &b, const Vec3 &c) {
  return dot(a, cross(b, c));
}

}  // namespace qcmc

#endif  // QCMC_VEC_H_
