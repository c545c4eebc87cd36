#pragma once

// Independent geometric checks against drawn realizations: signed area by the
// shoelace rule, winding numbers by angle summation (ray-casting equivalent),
// turning number by exterior-angle summation. Used to pin the combinatorial
// conventions of the diagram module to plane geometry.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

struct P {
  double x, y;
};

using Curve = std::vector<P>;  // closed polyline, last->first implied

inline Curve sample(const std::function<P(double)>& f, int n) {
  Curve c;
  c.reserve(n);
  for (int i = 0; i < n; ++i) c.push_back(f(2.0 * M_PI * i / n));
  return c;
}

inline double shoelace(const Curve& c) {
  double a = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    const P& p = c[i];
    const P& q = c[(i + 1) % c.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

inline double winding(const Curve& c, P z) {
  double total = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    const P& p = c[i];
    const P& q = c[(i + 1) % c.size()];
    double a1 = std::atan2(p.y - z.y, p.x - z.x);
    double a2 = std::atan2(q.y - z.y, q.x - z.x);
    double d = a2 - a1;
    while (d > M_PI) d -= 2 * M_PI;
    while (d < -M_PI) d += 2 * M_PI;
    total += d;
  }
  return total / (2 * M_PI);
}

inline double turning_number(const Curve& c) {
  double total = 0;
  size_t n = c.size();
  for (size_t i = 0; i < n; ++i) {
    const P& a = c[i];
    const P& b = c[(i + 1) % n];
    const P& d = c[(i + 2) % n];
    double h1 = std::atan2(b.y - a.y, b.x - a.x);
    double h2 = std::atan2(d.y - b.y, d.x - b.x);
    double t = h2 - h1;
    while (t > M_PI) t -= 2 * M_PI;
    while (t < -M_PI) t += 2 * M_PI;
    total += t;
  }
  return total / (2 * M_PI);
}

}  // namespace oracle
