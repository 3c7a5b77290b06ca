#pragma once

#include <memory>
#include <optional>

#include "toricode/gfq.hpp"
#include "toricode/intlat.hpp"

namespace toricode {

struct Guards {
  long long enumerationCap = 10000000;  // point/box enumeration cells
  long long distanceCap = 10000000;     // q^k codeword sweep
  int groebnerCap = 10000;              // basis size during Buchberger
};

// Validated toric input data (q, phi, beta, Q) realizing the exact sequence
// 0 -> Z^n -phi-> Z^r -beta-> Z^d -> 0 with torsion-free cokernel.
class ToricInstance {
 public:
  ToricInstance(int fieldSize, IntMat phi, IntMat qmat,
                std::optional<IntMat> beta = std::nullopt,
                Guards guards = Guards());

  const Field& field() const { return *field_; }
  int n() const { return n_; }
  int r() const { return r_; }
  int d() const { return d_; }
  int s() const { return s_; }
  const IntMat& phi() const { return phi_; }
  const IntMat& beta() const { return beta_; }
  const IntMat& qmat() const { return qmat_; }
  const IntMat& qphi() const { return qphi_; }  // Q * phi, s x n
  const Lattice& kerBeta() const { return kerBeta_; }
  bool complete() const { return complete_; }
  bool betaSupplied() const { return betaSupplied_; }
  const Guards& guards() const { return guards_; }

  // Throws when the fan is not complete yet a bounded graded piece is
  // required.
  void requireComplete(const char* what) const;

 private:
  std::shared_ptr<const Field> field_;
  int n_, r_, d_, s_;
  IntMat phi_, beta_, qmat_, qphi_;
  Lattice kerBeta_;
  bool complete_;
  bool betaSupplied_;
  Guards guards_;
};

// Cokernel map of phi from its Smith normal form (the last r-n rows of P).
// Throws when phi is rank deficient or the class group has torsion.
IntMat deriveBeta(const IntMat& phi);

// beta * m.
IntVec degreeOf(const IntMat& beta, const IntVec& m);

}  // namespace toricode
