#pragma once

#include <optional>
#include <vector>

#include "toricode/points.hpp"
#include "toricode/poly.hpp"
#include "toricode/toric.hpp"

namespace toricode {

// All monomials of S of degree alpha, sorted descending in the Cox-ring
// lex order (x_1 > ... > x_r).
struct MonomialBasis {
  IntVec alpha;
  std::vector<Exp> monomials;
};

MonomialBasis monomialsOfDegree(const ToricInstance& inst, const IntVec& alpha);

// Matrices over GF(q) hold element handles.
using GfMat = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

// Entry (i, j) = j-th monomial evaluated at the i-th canonical point.
GfMat evaluationMatrix(const ToricInstance& inst, const MonomialBasis& basis);
GfMat evaluationMatrixAt(const ToricInstance& inst, const MonomialBasis& basis,
                         const std::vector<TorusPoint>& points);

int gfRank(const Field& field, GfMat m);

struct CodeSummary {
  long long length = 0;                 // N = |Y_Q|
  int dimension = 0;                    // k = rank of the evaluation matrix
  std::optional<long long> distance;    // exhaustive minimum weight
  GfMat generator;                      // N x |S_alpha| evaluation matrix
};

CodeSummary codeParams(const ToricInstance& inst, const IntVec& alpha,
                       bool wantDistance);

// Exhaustive minimum Hamming weight of the column space of `generator`
// (codewords live in K^N indexed by points). nullopt for the zero code.
std::optional<long long> minimumDistance(const ToricInstance& inst,
                                         const GfMat& generator);

// Number of standard monomials of degree alpha modulo <idealGens> =
// dim S_alpha - dim I_alpha.
long long hilbertFunction(const ToricInstance& inst,
                          const std::vector<Polynomial>& idealGens,
                          const IntVec& alpha);

}  // namespace toricode
