#include "test_support.hpp"

#include <algorithm>
#include <functional>

namespace toricode::testsupport {

namespace {

// gcd of all k x k minors, zero if none are nonzero.
Int minorGcd(const IntMat& m, int k) {
  std::vector<Eigen::Index> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
  Int g(0);
  // Enumerate k-subsets of rows and columns.
  std::vector<Eigen::Index> rows, cols;
  std::vector<Eigen::Index> rsel, csel;
  std::function<void(Eigen::Index, Eigen::Index)> pickCols;
  std::function<void(Eigen::Index, Eigen::Index)> pickRows;
  pickCols = [&](Eigen::Index start, Eigen::Index left) {
    if (left == 0) {
      IntMat sub(k, k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          sub(a, b) = m(rsel[static_cast<std::size_t>(a)], csel[static_cast<std::size_t>(b)]);
      g = gcd(g, detBareiss(sub));
      return;
    }
    for (Eigen::Index c = start; c + left <= m.cols(); ++c) {
      csel.push_back(c);
      pickCols(c + 1, left - 1);
      csel.pop_back();
    }
  };
  pickRows = [&](Eigen::Index start, Eigen::Index left) {
    if (left == 0) {
      pickCols(0, k);
      return;
    }
    for (Eigen::Index r = start; r + left <= m.rows(); ++r) {
      rsel.push_back(r);
      pickRows(r + 1, left - 1);
      rsel.pop_back();
    }
  };
  pickRows(0, k);
  return abs(g);
}

}  // namespace

bool checkSnfContract(const IntMat& m, const SnfResult& s) {
  if (!matEq(s.d, s.p * m * s.k)) return false;
  if (abs(detBareiss(s.p)) != Int(1)) return false;
  if (abs(detBareiss(s.k)) != Int(1)) return false;
  const Eigen::Index diag = std::min(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < s.d.rows(); ++i)
    for (Eigen::Index j = 0; j < s.d.cols(); ++j)
      if (i != j && !s.d(i, j).isZero()) return false;
  Int prod(1);
  for (Eigen::Index i = 0; i < diag; ++i) {
    if (s.d(i, i).isNegative()) return false;
    if (i + 1 < diag && !s.d(i, i).isZero() &&
        !(s.d(i + 1, i + 1) % s.d(i, i)).isZero())
      return false;
    if (s.d(i, i).isZero() && i + 1 < diag && !s.d(i + 1, i + 1).isZero())
      return false;
    // Determinantal divisors (independent oracle).
    prod *= s.d(i, i);
    if (minorGcd(m, static_cast<int>(i) + 1) != abs(prod)) return false;
  }
  return true;
}

}  // namespace toricode::testsupport
