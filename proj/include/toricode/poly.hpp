#pragma once

#include <string>
#include <vector>

#include "toricode/gfq.hpp"
#include "toricode/intmat.hpp"

namespace toricode {

// Exponent vector of a monomial; entries nonnegative in valid polynomials.
using Exp = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

Exp zeroExp(int nvars);
Exp toExp(const IntVec& v);            // checked narrowing
bool expEq(const Exp& a, const Exp& b);
bool expDivides(const Exp& a, const Exp& b);  // a | b componentwise
bool expCoprime(const Exp& a, const Exp& b);
Exp expLcm(const Exp& a, const Exp& b);

// Lex order with an explicit variable priority (most significant first).
struct MonomialOrder {
  std::vector<int> priority;
  static MonomialOrder lex(int nvars);  // x_0 > x_1 > ... > x_{nvars-1}
};

// -1, 0, 1 for a < b, a == b, a > b.
int cmpExp(const MonomialOrder& ord, const Exp& a, const Exp& b);

struct Term {
  Field::Elem coef;
  Exp exp;
};

// Polynomial ring context: coefficient field, monomial order, variable
// names for rendering.
struct Ring {
  const Field* field;
  MonomialOrder order;
  int nvars;
  std::vector<std::string> names;
};

Ring makeLexRing(const Field& field, int nvars,
                 const std::string& prefix = "x");

// Terms sorted strictly descending in the ring order, no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
  static Polynomial fromTerms(const Ring& ring, std::vector<Term> terms);

  bool isZero() const { return terms_.empty(); }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

 private:
  int nvars_;
  std::vector<Term> terms_;
  friend Polynomial polyAddImpl(const Ring&, const Polynomial&,
                                const Polynomial&, Field::Elem);
  friend Polynomial polyMulMonomial(const Ring&, const Polynomial&,
                                    Field::Elem, const Exp&);
};

bool polyEq(const Polynomial& a, const Polynomial& b);

Polynomial polyAdd(const Ring& ring, const Polynomial& a, const Polynomial& b);
Polynomial polySub(const Ring& ring, const Polynomial& a, const Polynomial& b);
// c * x^shift * p
Polynomial polyMulMonomial(const Ring& ring, const Polynomial& p,
                           Field::Elem c, const Exp& shift);
Polynomial makeMonic(const Ring& ring, const Polynomial& p);

// x^{v+} - x^{v-}.
Polynomial toBinomial(const Ring& ring, const IntVec& v);

// Remainder of multivariate division of f by gs (in listed order).
Polynomial normalForm(const Ring& ring, Polynomial f,
                      const std::vector<Polynomial>& gs);

// Reduced Groebner basis: monic generators, pairwise non-divisible leading
// monomials, fully tail-reduced, sorted ascending by leading monomial.
// Deterministic: normal pair selection (minimal lcm, ties by index).
std::vector<Polynomial> buchberger(const Ring& ring,
                                   const std::vector<Polynomial>& gens,
                                   int basisCap = 10000);

// Generators of <gens> intersected with the subring on the kept variables.
// Every dropped variable must rank above every kept one in ring.order.
std::vector<Polynomial> eliminateVars(const Ring& ring,
                                      const std::vector<Polynomial>& gens,
                                      const std::vector<int>& dropVars,
                                      int basisCap = 10000);

// Generators of <gens> : f^infinity, via a fresh top-ranked variable u and
// elimination of u from <gens, u*f - 1>.
std::vector<Polynomial> saturate(const Ring& ring,
                                 const std::vector<Polynomial>& gens,
                                 const Polynomial& f, int basisCap = 10000);

bool idealEqual(const Ring& ring, const std::vector<Polynomial>& a,
                const std::vector<Polynomial>& b, int basisCap = 10000);

// Whether x^a - x^b is homogeneous for the grading beta (beta (a-b) == 0).
bool isHomogeneousBinomial(const IntMat& beta, const IntVec& a,
                           const IntVec& b);

Field::Elem evalPoly(const Ring& ring, const Polynomial& p,
                     const std::vector<Field::Elem>& coords);

std::string polyToString(const Ring& ring, const Polynomial& p);

}  // namespace toricode
