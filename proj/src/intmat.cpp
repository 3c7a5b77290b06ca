#include "toricode/intmat.hpp"

#include <ostream>
#include <sstream>

namespace toricode {

std::ostream& operator<<(std::ostream& os, const Int& a) {
  return os << a.v_;
}

Int floorDiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (!(a % b).isZero() && (a.isNegative() != b.isNegative())) q -= 1;
  return q;
}

Int ceilDiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (!(a % b).isZero() && (a.isNegative() == b.isNegative())) q += 1;
  return q;
}

Int mod(const Int& a, const Int& b) {
  Int m = a % b;
  if (m.isNegative()) m += abs(b);
  return m;
}

Int divExact(const Int& a, const Int& b) {
  if (b.isZero()) throw inputError("divExact: division by zero");
  if (!(a % b).isZero()) throw inputError("divExact: inexact division");
  return a / b;
}

IntMat intMat(std::initializer_list<std::initializer_list<long long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  Eigen::Index c = 0;
  if (r > 0) c = static_cast<Eigen::Index>(rows.begin()->size());
  IntMat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw inputError("intMat: ragged rows");
    Eigen::Index j = 0;
    for (long long x : row) m(i, j++) = Int(x);
    ++i;
  }
  return m;
}

IntVec intVec(std::initializer_list<long long> entries) {
  IntVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long long x : entries) v(i++) = Int(x);
  return v;
}

bool matEq(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool vecEq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool isZeroMat(const IntMat& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).isZero()) return false;
  return true;
}

bool isZeroVec(const IntVec& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!a(i).isZero()) return false;
  return true;
}

Int detBareiss(IntMat a) {
  if (a.rows() != a.cols()) throw inputError("detBareiss: matrix not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).isZero()) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (!a(i, k).isZero()) { piv = i; break; }
      if (piv < 0) return Int(0);
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = divExact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      a(i, k) = Int(0);
    }
    prev = a(k, k);
  }
  Int d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

std::string matToString(const IntMat& a, const std::string& indent) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    os << indent << "[";
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) os << " ";
      os << a(i, j);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace toricode
