#include "toricode/intlat.hpp"

#include <vector>

namespace toricode {

namespace {

void negateCol(IntMat& m, Eigen::Index j) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

// col j -= t * col c
void addMultipleCol(IntMat& m, Eigen::Index j, Eigen::Index c, const Int& t) {
  if (t.isZero()) return;
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) -= t * m(i, c);
}

}  // namespace

HnfResult hnf(const IntMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  HnfResult res;
  res.h = m;
  res.u = IntMat::Identity(cols, cols);
  IntMat& h = res.h;
  IntMat& u = res.u;

  Eigen::Index c = 0;  // next pivot column
  for (Eigen::Index i = 0; i < rows && c < cols; ++i) {
    // Kill all entries of row i right of column c by gcd steps, keeping the
    // smallest entry at position c.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index j = c; j < cols; ++j) {
        if (h(i, j).isZero()) continue;
        if (best < 0 || abs(h(i, j)) < abs(h(i, best))) best = j;
      }
      if (best < 0) break;  // row has no pivot
      if (best != c) {
        h.col(c).swap(h.col(best));
        u.col(c).swap(u.col(best));
      }
      bool clean = true;
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        if (h(i, j).isZero()) continue;
        Int t = h(i, j) / h(i, c);  // truncating quotient shrinks |h(i,j)|
        addMultipleCol(h, j, c, t);
        addMultipleCol(u, j, c, t);
        if (!h(i, j).isZero()) clean = false;
      }
      if (clean) break;
    }
    if (h(i, c).isZero()) continue;
    if (h(i, c).isNegative()) {
      negateCol(h, c);
      negateCol(u, c);
    }
    // Reduce the pivot row entries of the earlier pivot columns into
    // [0, pivot).
    for (Eigen::Index j = 0; j < c; ++j) {
      Int t = floorDiv(h(i, j), h(i, c));
      addMultipleCol(h, j, c, t);
      addMultipleCol(u, j, c, t);
    }
    ++c;
  }
  res.rank = static_cast<int>(c);
  return res;
}

SnfResult snf(const IntMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SnfResult res;
  res.d = m;
  res.p = IntMat::Identity(rows, rows);
  res.k = IntMat::Identity(cols, cols);
  IntMat& d = res.d;
  IntMat& p = res.p;
  IntMat& k = res.k;

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      // Minimal-absolute-value pivot in the trailing block.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j) {
          if (d(i, j).isZero()) continue;
          if (pi < 0 || abs(d(i, j)) < abs(d(pi, pj))) { pi = i; pj = j; }
        }
      if (pi < 0) break;  // trailing block is zero, done with this t and all after
      if (pi != t) { d.row(t).swap(d.row(pi)); p.row(t).swap(p.row(pi)); }
      if (pj != t) { d.col(t).swap(d.col(pj)); k.col(t).swap(k.col(pj)); }

      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t).isZero()) continue;
        Int q = d(i, t) / d(t, t);
        if (!q.isZero()) { d.row(i) -= q * d.row(t); p.row(i) -= q * p.row(t); }
        if (!d(i, t).isZero()) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j).isZero()) continue;
        Int q = d(t, j) / d(t, t);
        if (!q.isZero()) {
          addMultipleCol(d, j, t, q);
          addMultipleCol(k, j, t, q);
        }
        if (!d(t, j).isZero()) dirty = true;
      }
      if (dirty) continue;

      // Row and column t are clear; enforce divisibility of the rest.
      Eigen::Index badI = -1;
      for (Eigen::Index i = t + 1; i < rows && badI < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (!(d(i, j) % d(t, t)).isZero()) { badI = i; break; }
      if (badI < 0) break;
      d.row(t) += d.row(badI);
      p.row(t) += p.row(badI);
    }
    if (d(t, t).isNegative()) {
      for (Eigen::Index j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (Eigen::Index j = 0; j < rows; ++j) p(t, j) = -p(t, j);
    }
    if (d(t, t).isZero()) break;
  }
  return res;
}

IntMat kernelBasis(const IntMat& m) {
  HnfResult r = hnf(m);
  const Eigen::Index cols = m.cols();
  const Eigen::Index kdim = cols - r.rank;
  IntMat basis(cols, kdim);
  for (Eigen::Index j = 0; j < kdim; ++j)
    basis.col(j) = r.u.col(r.rank + j);
  return basis;
}

Lattice::Lattice(Eigen::Index ambientDim, const IntMat& generators)
    : ambient_(ambientDim) {
  if (generators.cols() > 0 && generators.rows() != ambientDim)
    throw inputError("Lattice: generator rows do not match ambient dimension");
  IntMat gens = generators;
  if (gens.cols() == 0) gens = IntMat(ambientDim, 0);
  HnfResult r = hnf(gens);
  basis_ = r.h.leftCols(r.rank);
}

Lattice latticeSum(const Lattice& a, const Lattice& b) {
  if (a.ambientDim() != b.ambientDim())
    throw inputError("latticeSum: ambient dimension mismatch");
  IntMat gens(a.ambientDim(), a.rank() + b.rank());
  gens.leftCols(a.rank()) = a.basis();
  gens.rightCols(b.rank()) = b.basis();
  return Lattice(a.ambientDim(), gens);
}

Lattice latticeIntersect(const Lattice& a, const Lattice& b) {
  if (a.ambientDim() != b.ambientDim())
    throw inputError("latticeIntersect: ambient dimension mismatch");
  // a x = b y  <=>  [a | -b] (x, y) = 0; intersection = a * { x-parts }.
  const Eigen::Index ra = a.rank(), rb = b.rank();
  if (ra == 0 || rb == 0) return Lattice(a.ambientDim());
  IntMat stacked(a.ambientDim(), ra + rb);
  stacked.leftCols(ra) = a.basis();
  stacked.rightCols(rb) = -b.basis();
  IntMat ker = kernelBasis(stacked);
  IntMat gens = a.basis() * ker.topRows(ra);
  return Lattice(a.ambientDim(), gens);
}

Lattice latticeColonInt(const Lattice& a, const Int& c) {
  if (c < Int(1)) throw inputError("latticeColonInt: c must be >= 1");
  if (c == Int(1)) return a;
  // {z : c z in a} = (a intersect c Z^ambient) / c.
  Lattice scaledFull = latticeScaled(fullLattice(a.ambientDim()), c);
  Lattice inter = latticeIntersect(a, scaledFull);
  IntMat gens = inter.basis();
  for (Eigen::Index j = 0; j < gens.cols(); ++j)
    for (Eigen::Index i = 0; i < gens.rows(); ++i)
      gens(i, j) = divExact(gens(i, j), c);
  return Lattice(a.ambientDim(), gens);
}

Lattice latticeScaled(const Lattice& a, const Int& c) {
  if (c < Int(1)) throw inputError("latticeScaled: c must be >= 1");
  IntMat gens = a.basis();
  for (Eigen::Index j = 0; j < gens.cols(); ++j)
    for (Eigen::Index i = 0; i < gens.rows(); ++i) gens(i, j) *= c;
  return Lattice(a.ambientDim(), gens);
}

bool solveHnf(const IntMat& hnfBasis, const IntVec& v, IntVec* coords) {
  IntVec r = v;
  IntVec x(hnfBasis.cols());
  for (Eigen::Index j = 0; j < hnfBasis.cols(); ++j) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = 0; i < hnfBasis.rows(); ++i)
      if (!hnfBasis(i, j).isZero()) { piv = i; break; }
    if (piv < 0) { x(j) = Int(0); continue; }
    // No later column touches this row, so r(piv) must clear exactly now.
    if (!(r(piv) % hnfBasis(piv, j)).isZero()) return false;
    x(j) = r(piv) / hnfBasis(piv, j);
    if (!x(j).isZero())
      for (Eigen::Index i = 0; i < hnfBasis.rows(); ++i)
        r(i) -= x(j) * hnfBasis(i, j);
  }
  if (!isZeroVec(r)) return false;
  if (coords) *coords = x;
  return true;
}

bool latticeContains(const Lattice& a, const IntVec& v) {
  if (v.size() != a.ambientDim())
    throw inputError("latticeContains: dimension mismatch");
  return solveHnf(a.basis(), v, nullptr);
}

Lattice imageLattice(const IntMat& m) { return Lattice(m.rows(), m); }

Lattice fullLattice(Eigen::Index ambientDim) {
  return Lattice(ambientDim, IntMat::Identity(ambientDim, ambientDim));
}

Int latticeIndex(const Lattice& sup, const Lattice& sub) {
  if (sup.ambientDim() != sub.ambientDim())
    throw inputError("latticeIndex: ambient dimension mismatch");
  if (sup.rank() != sub.rank())
    throw inputError("latticeIndex: rank mismatch (index not finite)");
  IntMat coords(sup.rank(), sub.rank());
  for (Eigen::Index j = 0; j < sub.rank(); ++j) {
    IntVec x;
    if (!solveHnf(sup.basis(), sub.basis().col(j), &x))
      throw inputError("latticeIndex: sub is not contained in sup");
    coords.col(j) = x;
  }
  return abs(detBareiss(coords));
}

SignSplit signSplit(const IntVec& v) {
  SignSplit s;
  s.plus = IntVec(v.size());
  s.minus = IntVec(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).isNegative()) {
      s.plus(i) = Int(0);
      s.minus(i) = -v(i);
    } else {
      s.plus(i) = v(i);
      s.minus(i) = Int(0);
    }
  }
  return s;
}

}  // namespace toricode
