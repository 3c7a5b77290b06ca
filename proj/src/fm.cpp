#include "toricode/fm.hpp"

#include <algorithm>
#include <set>

namespace toricode {

namespace {

// A row (a_1..a_n | b) encodes a_1 c_1 + ... + a_n c_n >= b.
using Row = std::vector<Int>;

struct System {
  std::vector<Row> rows;
  Eigen::Index nvars;
  bool infeasible = false;
};

void normalize(Row& r) {
  Int g(0);
  for (const Int& x : r) g = gcd(g, x);
  if (g > Int(1))
    for (Int& x : r) x = divExact(x, g);
}

bool allCoeffsZero(const Row& r, Eigen::Index nvars) {
  for (Eigen::Index i = 0; i < nvars; ++i)
    if (!r[static_cast<std::size_t>(i)].isZero()) return false;
  return true;
}

void pushRow(System& sys, Row r) {
  normalize(r);
  if (allCoeffsZero(r, sys.nvars)) {
    if (r.back() > Int(0)) sys.infeasible = true;
    return;  // 0 >= nonpositive is vacuous
  }
  sys.rows.push_back(std::move(r));
}

void dedupe(System& sys) {
  std::sort(sys.rows.begin(), sys.rows.end());
  sys.rows.erase(std::unique(sys.rows.begin(), sys.rows.end()),
                 sys.rows.end());
}

System makeSystem(const IntMat& a, const IntVec* b) {
  System sys;
  sys.nvars = a.cols();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Row r(static_cast<std::size_t>(a.cols()) + 1);
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r[static_cast<std::size_t>(j)] = a(i, j);
    r.back() = b ? (*b)(i) : Int(0);
    pushRow(sys, std::move(r));
  }
  dedupe(sys);
  return sys;
}

void eliminateVar(System& sys, Eigen::Index k, std::size_t rowGuard) {
  const auto ki = static_cast<std::size_t>(k);
  std::vector<Row> keep, pos, neg;
  for (Row& r : sys.rows) {
    int s = r[ki].sign();
    if (s == 0)
      keep.push_back(std::move(r));
    else if (s > 0)
      pos.push_back(std::move(r));
    else
      neg.push_back(std::move(r));
  }
  System next;
  next.nvars = sys.nvars;
  next.infeasible = sys.infeasible;
  next.rows = std::move(keep);
  for (const Row& p : pos)
    for (const Row& n : neg) {
      // p[k] > 0, n[k] < 0: p[k]*n + (-n[k])*p cancels variable k.
      Row combo(p.size());
      const Int& pk = p[ki];
      const Int mk = -n[ki];
      for (std::size_t i = 0; i < p.size(); ++i)
        combo[i] = pk * n[i] + mk * p[i];
      pushRow(next, std::move(combo));
      if (next.rows.size() > rowGuard)
        throw guardError("Fourier-Motzkin row guard exceeded");
    }
  dedupe(next);
  sys = std::move(next);
}

// Project onto variable `axis` by eliminating all others.
System projectToAxis(System sys, Eigen::Index axis, std::size_t rowGuard) {
  for (Eigen::Index j = 0; j < sys.nvars; ++j)
    if (j != axis) eliminateVar(sys, j, rowGuard);
  return sys;
}

}  // namespace

bool coneIsTrivial(const IntMat& a, std::size_t rowGuard) {
  if (a.cols() == 0) return true;
  for (Eigen::Index axis = 0; axis < a.cols(); ++axis) {
    System proj = projectToAxis(makeSystem(a, nullptr), axis, rowGuard);
    bool hasPos = false, hasNeg = false;
    for (const Row& r : proj.rows) {
      int s = r[static_cast<std::size_t>(axis)].sign();
      if (s > 0) hasPos = true;
      if (s < 0) hasNeg = true;
    }
    if (!(hasPos && hasNeg)) return false;  // axis projection is not {0}
  }
  return true;
}

std::optional<std::vector<std::pair<Int, Int>>> fmBox(const IntMat& a,
                                                      const IntVec& b,
                                                      std::size_t rowGuard) {
  std::vector<std::pair<Int, Int>> box(static_cast<std::size_t>(a.cols()));
  System base = makeSystem(a, &b);
  if (base.infeasible) {
    for (auto& [lo, hi] : box) { lo = Int(1); hi = Int(0); }
    return box;
  }
  for (Eigen::Index axis = 0; axis < a.cols(); ++axis) {
    System proj = projectToAxis(base, axis, rowGuard);
    if (proj.infeasible) {
      for (auto& [lo, hi] : box) { lo = Int(1); hi = Int(0); }
      return box;
    }
    bool hasLo = false, hasHi = false;
    Int lo(0), hi(0);
    for (const Row& r : proj.rows) {
      const Int& coef = r[static_cast<std::size_t>(axis)];
      const Int& rhs = r.back();
      if (coef > Int(0)) {
        Int cand = ceilDiv(rhs, coef);
        if (!hasLo || cand > lo) lo = cand;
        hasLo = true;
      } else if (coef < Int(0)) {
        Int cand = floorDiv(rhs, coef);
        if (!hasHi || cand < hi) hi = cand;
        hasHi = true;
      }
    }
    if (!hasLo || !hasHi) return std::nullopt;
    box[static_cast<std::size_t>(axis)] = {lo, hi};
  }
  return box;
}

}  // namespace toricode
