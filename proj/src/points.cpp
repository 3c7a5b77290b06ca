#include "toricode/points.hpp"

#include <map>

namespace toricode {

namespace {

// Entries reduced into [0, q-2]; exponent arithmetic then stays in int64.
std::vector<std::vector<int>> reducedColumns(const IntMat& m, int modulus) {
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    auto& col = cols[static_cast<std::size_t>(j)];
    col.resize(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      col[static_cast<std::size_t>(i)] =
          static_cast<int>(mod(m(i, j), Int(modulus)).toInt64());
  }
  return cols;
}

long long checkedPowForGuard(int base, int e, long long cap) {
  long long v = 1;
  for (int i = 0; i < e; ++i) {
    v *= base;
    if (v > cap) return -1;
  }
  return v;
}

}  // namespace

std::vector<TorusPoint> enumeratePoints(const ToricInstance& inst) {
  const int q = inst.field().q();
  const int m = q - 1;
  const int s = inst.s(), r = inst.r(), n = inst.n();
  if (checkedPowForGuard(m, s, inst.guards().enumerationCap) < 0)
    throw guardError("point enumeration guard exceeded: (q-1)^s too large");

  // h-dot products against the columns of Q (for coordinates) and of
  // Q phi (for keys), all mod q-1.
  auto qCols = reducedColumns(inst.qmat(), m);
  auto keyCols = reducedColumns(inst.qphi(), m);

  std::map<std::vector<int>, std::vector<Field::Elem>> classes;
  std::vector<int> h(static_cast<std::size_t>(s), 0);
  for (;;) {
    std::vector<int> key(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      long long acc = 0;
      for (int i = 0; i < s; ++i)
        acc += static_cast<long long>(h[static_cast<std::size_t>(i)]) *
               keyCols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      key[static_cast<std::size_t>(j)] = static_cast<int>(acc % m);
    }
    if (!classes.count(key)) {
      std::vector<Field::Elem> coords(static_cast<std::size_t>(r));
      for (int j = 0; j < r; ++j) {
        long long acc = 0;
        for (int i = 0; i < s; ++i)
          acc += static_cast<long long>(h[static_cast<std::size_t>(i)]) *
                 qCols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        coords[static_cast<std::size_t>(j)] = inst.field().fromDlog(acc);
      }
      classes.emplace(std::move(key), std::move(coords));
    }
    // Odometer over {0..q-2}^s, lexicographic with h_1 most significant.
    int pos = s - 1;
    while (pos >= 0 && h[static_cast<std::size_t>(pos)] == m - 1) {
      h[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++h[static_cast<std::size_t>(pos)];
  }

  std::vector<TorusPoint> out;
  out.reserve(classes.size());
  for (auto& [key, coords] : classes)
    out.push_back({std::move(coords), key});
  return out;
}

long long kernelSizeCount(const ToricInstance& inst) {
  const int q = inst.field().q();
  const int m = q - 1;
  const int s = inst.s(), n = inst.n();
  if (checkedPowForGuard(m, s, inst.guards().enumerationCap) < 0)
    throw guardError("length enumeration guard exceeded: (q-1)^s too large");

  auto keyCols = reducedColumns(inst.qphi(), m);
  long long kernelSize = 0;
  std::vector<int> h(static_cast<std::size_t>(s), 0);
  for (;;) {
    bool inKernel = true;
    for (int j = 0; j < n && inKernel; ++j) {
      long long acc = 0;
      for (int i = 0; i < s; ++i)
        acc += static_cast<long long>(h[static_cast<std::size_t>(i)]) *
               keyCols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (acc % m != 0) inKernel = false;
    }
    if (inKernel) ++kernelSize;
    int pos = s - 1;
    while (pos >= 0 && h[static_cast<std::size_t>(pos)] == m - 1) {
      h[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++h[static_cast<std::size_t>(pos)];
  }
  return kernelSize;
}

long long lengthCount(const ToricInstance& inst) {
  const int m = inst.field().q() - 1;
  long long total = 1;
  for (int i = 0; i < inst.s(); ++i) total *= m;
  return total / kernelSizeCount(inst);  // Lagrange: always exact
}

Int lengthSnf(const ToricInstance& inst) {
  const Int m(inst.field().q() - 1);
  SnfResult s = snf(inst.qphi());
  Int n(1);
  const Eigen::Index diag = std::min(s.d.rows(), s.d.cols());
  for (Eigen::Index i = 0; i < diag; ++i)
    n *= divExact(m, gcd(m, s.d(i, i)));
  return n;
}

}  // namespace toricode
