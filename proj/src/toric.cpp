#include "toricode/toric.hpp"

#include "toricode/fm.hpp"

namespace toricode {

namespace {

bool snfDiagonalAllOnes(const IntMat& m, Eigen::Index count) {
  SnfResult s = snf(m);
  for (Eigen::Index i = 0; i < count; ++i)
    if (s.d(i, i) != Int(1)) return false;
  return true;
}

}  // namespace

IntMat deriveBeta(const IntMat& phi) {
  const Eigen::Index r = phi.rows(), n = phi.cols();
  if (r < n) throw inputError("deriveBeta: phi must have at least as many rows as columns");
  SnfResult s = snf(phi);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (s.d(i, i).isZero())
      throw inputError("deriveBeta: phi is rank deficient");
    if (s.d(i, i) != Int(1))
      throw unsupportedError("deriveBeta: class group has torsion");
  }
  return s.p.bottomRows(r - n);
}

IntVec degreeOf(const IntMat& beta, const IntVec& m) {
  if (m.size() != beta.cols()) throw inputError("degreeOf: length mismatch");
  return beta * m;
}

ToricInstance::ToricInstance(int fieldSize, IntMat phi, IntMat qmat,
                             std::optional<IntMat> beta, Guards guards)
    : field_(std::make_shared<Field>(fieldSize)),
      phi_(std::move(phi)),
      qmat_(std::move(qmat)),
      kerBeta_(0),
      guards_(guards) {
  r_ = static_cast<int>(phi_.rows());
  n_ = static_cast<int>(phi_.cols());
  if (r_ <= 0 || n_ <= 0) throw inputError("phi must be a nonempty r x n matrix");
  if (r_ < n_) throw inputError("phi must have at least as many rows as columns");
  d_ = r_ - n_;
  if (qmat_.cols() != r_) throw inputError("Q must have r columns");
  s_ = static_cast<int>(qmat_.rows());
  if (s_ <= 0) throw inputError("Q must have at least one row");

  {
    HnfResult h = hnf(phi_);
    if (h.rank != n_) throw inputError("phi is rank deficient");
  }

  if (beta) {
    beta_ = std::move(*beta);
    betaSupplied_ = true;
    if (beta_.rows() != d_ || beta_.cols() != r_)
      throw inputError("beta must be a (r-n) x r matrix");
    if (!isZeroMat(beta_ * phi_))
      throw inputError("exactness failure: beta * phi != 0");
    if (d_ > 0 && !snfDiagonalAllOnes(beta_, d_))
      throw unsupportedError("beta is not surjective onto Z^d (torsion)");
  } else {
    beta_ = deriveBeta(phi_);
    betaSupplied_ = false;
  }

  qphi_ = qmat_ * phi_;
  kerBeta_ = Lattice(kernelBasis(beta_));
  if (kerBeta_ != imageLattice(phi_))
    throw unsupportedError(
        "exact sequence is not exact at Z^r (torsion class group or "
        "inconsistent beta)");
  complete_ = coneIsTrivial(phi_);
}

void ToricInstance::requireComplete(const char* what) const {
  if (!complete_)
    throw unsupportedError(std::string(what) +
                           " requires a complete fan (bounded graded pieces)");
}

}  // namespace toricode
