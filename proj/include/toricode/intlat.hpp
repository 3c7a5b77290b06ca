#pragma once

#include <utility>

#include "toricode/intmat.hpp"

namespace toricode {

// Column Hermite normal form: h = m * u with u unimodular. Pivot columns
// come first with strictly descending staircase (each pivot strictly below
// the previous), pivots positive, entries left of a pivot reduced into
// [0, pivot), entries right of a pivot zero; zero columns trail. The form
// is canonical: two column-generating sets span the same lattice iff their
// pivot blocks agree entrywise.
struct HnfResult {
  IntMat h;
  IntMat u;
  int rank = 0;
};
HnfResult hnf(const IntMat& m);

// Smith normal form: p * m * k = d with p, k unimodular, d diagonal,
// d_i >= 0 and d_i | d_{i+1}.
struct SnfResult {
  IntMat d;
  IntMat p;
  IntMat k;
};
SnfResult snf(const IntMat& m);

// Z-basis of {v : m v = 0} as matrix columns; a 0-column matrix when the
// kernel is trivial. The basis is the set of u-columns matching the zero
// columns of the HNF (not itself canonicalized; wrap in a Lattice for
// canonical comparisons).
IntMat kernelBasis(const IntMat& m);

// A subgroup of Z^ambient held in canonical column-HNF form, so lattice
// equality is entrywise basis comparison.
class Lattice {
 public:
  explicit Lattice(Eigen::Index ambientDim)
      : ambient_(ambientDim), basis_(ambientDim, 0) {}
  Lattice(Eigen::Index ambientDim, const IntMat& generators);
  explicit Lattice(const IntMat& generators)
      : Lattice(generators.rows(), generators) {}

  Eigen::Index ambientDim() const { return ambient_; }
  Eigen::Index rank() const { return basis_.cols(); }
  const IntMat& basis() const { return basis_; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && matEq(a.basis_, b.basis_);
  }
  friend bool operator!=(const Lattice& a, const Lattice& b) {
    return !(a == b);
  }

 private:
  Eigen::Index ambient_;
  IntMat basis_;
};

Lattice latticeSum(const Lattice& a, const Lattice& b);
Lattice latticeIntersect(const Lattice& a, const Lattice& b);
// {z : c z in a}, c >= 1.
Lattice latticeColonInt(const Lattice& a, const Int& c);
// c * a for c >= 1.
Lattice latticeScaled(const Lattice& a, const Int& c);
bool latticeContains(const Lattice& a, const IntVec& v);
// Lattice generated by the columns of m.
Lattice imageLattice(const IntMat& m);
// Full lattice Z^ambient.
Lattice fullLattice(Eigen::Index ambientDim);

// Subgroup index [sup : sub] for finite index (requires equal rank and
// containment); |det| of the coordinate matrix of sub in a basis of sup.
Int latticeIndex(const Lattice& sup, const Lattice& sub);

// Coordinates x with basis * x = v, if v lies in the column span over Z.
// basis must be in column HNF.
bool solveHnf(const IntMat& hnfBasis, const IntVec& v, IntVec* coords);

// v = plus - minus with disjoint supports, both componentwise nonnegative.
struct SignSplit {
  IntVec plus;
  IntVec minus;
};
SignSplit signSplit(const IntVec& v);

}  // namespace toricode
