#pragma once

#include <string>

#include "nonarch/quadext.hpp"

namespace nonarch {

// Valuation value: an element of (Q + Q*sqrt2) extended by +infinity.
// Ball radii are stored as levels (radius = 2^-level); 2^-level is never
// materialized, all comparisons happen on the exponent scale where a
// larger level means a smaller radius.
class Level {
 public:
  Level() : infinite_(true) {}  // default: infinity (valuation of zero)
  static Level infinity() { return Level(); }
  static Level finite(QuadExt v) {
    Level l;
    l.infinite_ = false;
    l.value_ = std::move(v);
    return l;
  }
  static Level finite(long n) { return finite(QuadExt(n)); }

  bool is_infinite() const { return infinite_; }
  const QuadExt& value() const { return value_; }  // only when finite

  friend bool operator==(const Level& x, const Level& y) {
    if (x.infinite_ != y.infinite_) return false;
    return x.infinite_ || x.value_ == y.value_;
  }
  friend bool operator!=(const Level& x, const Level& y) { return !(x == y); }
  friend bool operator<(const Level& x, const Level& y) {
    if (x.infinite_) return false;
    if (y.infinite_) return true;
    return x.value_ < y.value_;
  }
  friend bool operator>(const Level& x, const Level& y) { return y < x; }
  friend bool operator<=(const Level& x, const Level& y) { return !(y < x); }
  friend bool operator>=(const Level& x, const Level& y) { return !(x < y); }

  friend Level min(const Level& x, const Level& y) { return x < y ? x : y; }

  // Infinity absorbs addition.
  friend Level operator+(const Level& x, const Level& y) {
    if (x.infinite_ || y.infinite_) return infinity();
    return finite(x.value_ + y.value_);
  }

  // Scale a level by a finite factor m > 0 (infinity stays infinite).
  friend Level scale(const QuadExt& m, const Level& x) {
    if (x.infinite_) return infinity();
    return finite(m * x.value_);
  }

  std::string to_string() const {
    return infinite_ ? "inf" : quadext_to_string(value_);
  }

 private:
  bool infinite_;
  QuadExt value_;
};

}  // namespace nonarch
