#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "toricode/errors.hpp"

namespace toricode {

// Exact arbitrary-precision integer scalar. Intermediate values in the
// normal-form algorithms can exceed any fixed word size, so every matrix
// entry in the library is one of these. The wrapper keeps the scalar a
// plain value type that Eigen can treat like a builtin.
class Int {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Int() : v_(0) {}
  Int(int x) : v_(x) {}                // NOLINT: implicit by design
  Int(long x) : v_(x) {}               // NOLINT
  Int(long long x) : v_(x) {}          // NOLINT
  explicit Int(Rep x) : v_(std::move(x)) {}

  const Rep& rep() const { return v_; }

  bool isZero() const { return v_.is_zero(); }
  bool isNegative() const { return v_.sign() < 0; }
  int sign() const { return v_.sign(); }

  // Checked narrowing; members of lattice bases stay tiny at the scales
  // this library targets, but the conversion still refuses to lie.
  std::int64_t toInt64() const {
    if (v_ > std::numeric_limits<std::int64_t>::max() ||
        v_ < std::numeric_limits<std::int64_t>::min())
      throw Error(ErrorKind::Guard, "integer too large for 64-bit narrowing");
    return static_cast<std::int64_t>(v_);
  }

  std::string str() const { return v_.str(); }

  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }  // truncating
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
  friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }
  friend Int operator-(const Int& a) { return Int(-a.v_); }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& a);

 private:
  Rep v_;
};

std::ostream& operator<<(std::ostream& os, const Int& a);

inline Int abs(const Int& a) { return a.isNegative() ? -a : a; }
inline Int gcd(const Int& a, const Int& b) {
  return Int(boost::multiprecision::gcd(a.rep(), b.rep()));
}

// Floor division/remainder (C++ '/' truncates toward zero).
Int floorDiv(const Int& a, const Int& b);
Int ceilDiv(const Int& a, const Int& b);
// Remainder in [0, |b|).
Int mod(const Int& a, const Int& b);
// Division known to be exact; throws on a nonzero remainder.
Int divExact(const Int& a, const Int& b);

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

IntMat intMat(std::initializer_list<std::initializer_list<long long>> rows);
IntVec intVec(std::initializer_list<long long> entries);

bool matEq(const IntMat& a, const IntMat& b);
bool vecEq(const IntVec& a, const IntVec& b);
bool isZeroMat(const IntMat& a);
bool isZeroVec(const IntVec& a);

// Exact determinant of a square matrix via Bareiss fraction-free elimination.
Int detBareiss(IntMat a);

std::string matToString(const IntMat& a, const std::string& indent = "  ");

}  // namespace toricode

namespace Eigen {

template <>
struct NumTraits<toricode::Int> {
  using Self = toricode::Int;
  using Real = Self;
  using NonInteger = Self;
  using Literal = Self;
  using Nested = Self;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 10,
    MulCost = 20,
  };
  static inline Self epsilon() { return Self(0); }
  static inline Self dummy_precision() { return Self(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
