#pragma once

#include <optional>
#include <vector>

#include "toricode/intlat.hpp"
#include "toricode/poly.hpp"
#include "toricode/toric.hpp"

namespace toricode {

// The Cox ring S = K[x_1..x_r] with lex x_1 > ... > x_r.
Ring coxRing(const ToricInstance& inst);

enum class IdealMethod { Elimination, LatticeSaturation, ColonShortcut, Degenerate };

const char* idealMethodName(IdealMethod m);

struct VanishingIdealResult {
  std::vector<Polynomial> generators;  // reduced Groebner basis in coxRing
  IdealMethod method;
  std::optional<Lattice> lattice;  // the L with I(Y_Q) = I_L, when computed
};

// Elimination route: Groebner basis of the mixed ideal J in
// K[x_1..x_r, y_1..y_s, z_1..z_d, w] under lex w > z > y > x, intersected
// with S.
VanishingIdealResult idealViaElimination(const ToricInstance& inst);

// Basis matrix phi * pi_s(ker[Q phi | (q-1) I_s]) exactly as the lattice
// algorithm produces it, before canonicalization. The complete-intersection
// test must see this matrix: mixed-dominating is basis-dependent.
IntMat latticeLBasisRaw(const ToricInstance& inst);

// The lattice L with I(Y_Q) = I_L, canonical.
Lattice latticeL(const ToricInstance& inst);

// Membership in L_1 = {m in ker beta : Q m = 0 mod q-1}.
bool inL1(const ToricInstance& inst, const IntVec& m);

// Saturation route: lattice basis ideal of L saturated by every variable.
VanishingIdealResult idealViaLattice(const ToricInstance& inst);

// (L_Q intersect L_beta) + (q-1) L_beta, and whether the colon condition
// QL_beta = QL_beta : (q-1) holds (iff that lattice equals L).
struct ColonShortcut {
  Lattice lattice;
  bool conditionHolds;
};
ColonShortcut latticeViaColon(const ToricInstance& inst);

// Whether A Q = beta is solvable over Q, i.e. L_Q is contained in L_beta.
bool isQHomogeneous(const ToricInstance& inst);

// Degenerate-torus lattice D * ker(beta D) for square diagonal Q, with
// D_ii the multiplicative order of eta^{Q_ii}.
Lattice latticeDegenerate(const ToricInstance& inst);

// Every column has a positive and a negative entry.
bool isMixed(const IntMat& m);
// No square submatrix is mixed.
bool isDominating(const IntMat& m);

struct CiReport {
  IntMat basis;  // raw algorithm basis examined
  bool mixed = false;
  bool dominating = false;
  bool completeIntersection = false;
  bool anomaly = false;  // dominating but not mixed (unreachable when
                         // L cap N^r = {0} holds; surfaced, not decided)
};
// Complete-intersection test for I(Y_Q); verifies L cap N^r = {0} via the
// fan-completeness certificate plus a small-box search before deciding.
CiReport completeIntersection(const ToricInstance& inst);

}  // namespace toricode
