#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

namespace lagcob {

using Rational = boost::multiprecision::cpp_rational;

// Exact two-level number s + e*eps, where eps is a formal positive
// infinitesimal. The eps component models area labels like "0" (a domain
// much smaller than every other area in the diagram) and "A+" (slightly
// bigger than A). Ordering is lexicographic on (standard, eps).
struct Area {
  Rational standard{0};
  Rational eps{0};

  Area() = default;
  Area(Rational s) : standard(std::move(s)) {}
  Area(Rational s, Rational e) : standard(std::move(s)), eps(std::move(e)) {}
  Area(long s) : standard(s) {}
  Area(long num, long den) : standard(Rational(num, den)) {}

  static Area infinitesimal(Rational e) { return Area(Rational(0), std::move(e)); }

  bool is_zero() const { return standard == 0 && eps == 0; }
  bool is_positive() const { return standard > 0 || (standard == 0 && eps > 0); }
  bool standard_zero() const { return standard == 0; }

  Area operator-() const { return Area(-standard, -eps); }
  Area& operator+=(const Area& o) {
    standard += o.standard;
    eps += o.eps;
    return *this;
  }
  Area& operator-=(const Area& o) {
    standard -= o.standard;
    eps -= o.eps;
    return *this;
  }

  friend Area operator+(Area a, const Area& b) { return a += b; }
  friend Area operator-(Area a, const Area& b) { return a -= b; }
  friend Area operator*(const Rational& k, const Area& a) {
    return Area(k * a.standard, k * a.eps);
  }
  friend Area operator*(long k, const Area& a) { return Rational(k) * a; }

  friend bool operator==(const Area& a, const Area& b) {
    return a.standard == b.standard && a.eps == b.eps;
  }
  friend std::strong_ordering operator<=>(const Area& a, const Area& b) {
    if (a.standard != b.standard)
      return a.standard < b.standard ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.eps != b.eps)
      return a.eps < b.eps ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Area abs(const Area& a) { return a.is_positive() || a.is_zero() ? a : -a; }

  // Canonical text form: "3/2", "0+1/4eps", "2-1eps".
  std::string str() const {
    std::ostringstream os;
    os << standard.str();
    if (eps != 0) {
      if (eps > 0) os << '+';
      os << eps.str() << "eps";
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Area& a) { return os << a.str(); }
};

}  // namespace lagcob
