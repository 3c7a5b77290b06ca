#include "toricode/codes.hpp"

#include <algorithm>

#include "toricode/fm.hpp"
#include "toricode/vanish.hpp"

namespace toricode {

MonomialBasis monomialsOfDegree(const ToricInstance& inst,
                                const IntVec& alpha) {
  inst.requireComplete("monomial enumeration");
  if (alpha.size() != inst.d())
    throw inputError("alpha must have length d = r - n");
  const int r = inst.r(), n = inst.n(), d = inst.d();

  // Particular solution of beta m0 = alpha. The column HNF of a surjective
  // beta has identity pivot block, so m0 = U[:, 0:d] alpha.
  IntVec m0 = IntVec::Zero(r);
  if (d > 0) {
    HnfResult h = hnf(inst.beta());
    for (int i = 0; i < d; ++i)
      if (h.h(i, i) != Int(1))
        throw inputError("beta is not surjective; no graded piece basis");
    m0 = h.u.leftCols(d) * alpha;
  }

  // Full solution set {m0 + phi c}; bound c by m0 + phi c >= 0.
  auto box = fmBox(inst.phi(), -m0);
  if (!box)
    throw unsupportedError("graded piece is unbounded");  // non-complete fan
  long long cells = 1;
  for (const auto& [lo, hi] : *box) {
    if (lo > hi) { cells = 0; break; }
    Int width = hi - lo + Int(1);
    cells *= width.toInt64();
    if (cells > inst.guards().enumerationCap)
      throw guardError("monomial box guard exceeded");
  }

  MonomialBasis basis;
  basis.alpha = alpha;
  if (cells == 0) return basis;

  Ring cox = coxRing(inst);
  std::vector<Int> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (*box)[static_cast<std::size_t>(i)].first;
  for (;;) {
    IntVec cv(n);
    for (int i = 0; i < n; ++i) cv(i) = c[static_cast<std::size_t>(i)];
    IntVec m = m0 + inst.phi() * cv;
    bool nonneg = true;
    for (int i = 0; i < r; ++i)
      if (m(i).isNegative()) { nonneg = false; break; }
    if (nonneg) basis.monomials.push_back(toExp(m));
    int pos = n - 1;
    while (pos >= 0 &&
           c[static_cast<std::size_t>(pos)] == (*box)[static_cast<std::size_t>(pos)].second) {
      c[static_cast<std::size_t>(pos)] = (*box)[static_cast<std::size_t>(pos)].first;
      --pos;
    }
    if (pos < 0) break;
    c[static_cast<std::size_t>(pos)] += 1;
  }
  std::sort(basis.monomials.begin(), basis.monomials.end(),
            [&](const Exp& a, const Exp& b) { return cmpExp(cox.order, a, b) > 0; });
  return basis;
}

GfMat evaluationMatrixAt(const ToricInstance& inst, const MonomialBasis& basis,
                         const std::vector<TorusPoint>& points) {
  const Field& f = inst.field();
  const int m = f.q() - 1;
  GfMat out(static_cast<Eigen::Index>(points.size()),
            static_cast<Eigen::Index>(basis.monomials.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<long long> dlogs(static_cast<std::size_t>(inst.r()));
    for (int c = 0; c < inst.r(); ++c)
      dlogs[static_cast<std::size_t>(c)] = f.dlog(points[i].coords[static_cast<std::size_t>(c)]);
    for (std::size_t j = 0; j < basis.monomials.size(); ++j) {
      const Exp& e = basis.monomials[j];
      long long acc = 0;
      for (int c = 0; c < inst.r(); ++c)
        acc = (acc + (e(c) % m) * dlogs[static_cast<std::size_t>(c)]) % m;
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          f.fromDlog(acc);
    }
  }
  return out;
}

GfMat evaluationMatrix(const ToricInstance& inst, const MonomialBasis& basis) {
  return evaluationMatrixAt(inst, basis, enumeratePoints(inst));
}

int gfRank(const Field& field, GfMat m) {
  int rank = 0;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index j = 0; j < cols && rank < rows; ++j) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = rank; i < rows; ++i)
      if (m(i, j) != 0) { piv = i; break; }
    if (piv < 0) continue;
    m.row(rank).swap(m.row(piv));
    Field::Elem inv = field.inv(static_cast<Field::Elem>(m(rank, j)));
    for (Eigen::Index c = j; c < cols; ++c)
      m(rank, c) = field.mul(static_cast<Field::Elem>(m(rank, c)), inv);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == rank || m(i, j) == 0) continue;
      Field::Elem factor = static_cast<Field::Elem>(m(i, j));
      for (Eigen::Index c = j; c < cols; ++c)
        m(i, c) = field.sub(static_cast<Field::Elem>(m(i, c)),
                            field.mul(factor, static_cast<Field::Elem>(m(rank, c))));
    }
    ++rank;
  }
  return rank;
}

std::optional<long long> minimumDistance(const ToricInstance& inst,
                                         const GfMat& generator) {
  const Field& f = inst.field();
  // Codewords are the column space; row-reduce the transpose to get a
  // basis of the code inside K^N.
  GfMat t = generator.transpose();
  const Eigen::Index rows = t.rows(), cols = t.cols();
  int rank = 0;
  for (Eigen::Index j = 0; j < cols && rank < rows; ++j) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = rank; i < rows; ++i)
      if (t(i, j) != 0) { piv = i; break; }
    if (piv < 0) continue;
    t.row(rank).swap(t.row(piv));
    Field::Elem inv = f.inv(static_cast<Field::Elem>(t(rank, j)));
    for (Eigen::Index c = 0; c < cols; ++c)
      t(rank, c) = f.mul(static_cast<Field::Elem>(t(rank, c)), inv);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == rank || t(i, j) == 0) continue;
      Field::Elem factor = static_cast<Field::Elem>(t(i, j));
      for (Eigen::Index c = 0; c < cols; ++c)
        t(i, c) = f.sub(static_cast<Field::Elem>(t(i, c)),
                        f.mul(factor, static_cast<Field::Elem>(t(rank, c))));
    }
    ++rank;
  }
  if (rank == 0) return std::nullopt;

  long long total = 1;
  for (int i = 0; i < rank; ++i) {
    total *= f.q();
    if (total > inst.guards().distanceCap)
      throw guardError("distance enumeration guard exceeded: q^k too large");
  }

  // Sweep all nonzero coefficient vectors over the row basis.
  std::vector<Field::Elem> msg(static_cast<std::size_t>(rank), 0);
  std::vector<Field::Elem> word(static_cast<std::size_t>(cols), 0);
  long long best = cols + 1;
  for (;;) {
    int pos = rank - 1;
    while (pos >= 0 && msg[static_cast<std::size_t>(pos)] ==
                           static_cast<Field::Elem>(f.q() - 1)) {
      msg[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++msg[static_cast<std::size_t>(pos)];
    std::fill(word.begin(), word.end(), 0);
    for (int i = 0; i < rank; ++i) {
      if (msg[static_cast<std::size_t>(i)] == 0) continue;
      for (Eigen::Index c = 0; c < cols; ++c)
        word[static_cast<std::size_t>(c)] =
            f.add(word[static_cast<std::size_t>(c)],
                  f.mul(msg[static_cast<std::size_t>(i)],
                        static_cast<Field::Elem>(t(i, c))));
    }
    long long weight = 0;
    for (Field::Elem w : word)
      if (w != 0) ++weight;
    if (weight < best) best = weight;
  }
  return best;
}

CodeSummary codeParams(const ToricInstance& inst, const IntVec& alpha,
                       bool wantDistance) {
  CodeSummary out;
  MonomialBasis basis = monomialsOfDegree(inst, alpha);
  std::vector<TorusPoint> points = enumeratePoints(inst);
  out.length = static_cast<long long>(points.size());
  out.generator = evaluationMatrixAt(inst, basis, points);
  out.dimension = gfRank(inst.field(), out.generator);
  if (wantDistance && out.dimension > 0)
    out.distance = minimumDistance(inst, out.generator);
  return out;
}

long long hilbertFunction(const ToricInstance& inst,
                          const std::vector<Polynomial>& idealGens,
                          const IntVec& alpha) {
  Ring cox = coxRing(inst);
  std::vector<Polynomial> gb =
      buchberger(cox, idealGens, inst.guards().groebnerCap);
  MonomialBasis basis = monomialsOfDegree(inst, alpha);
  long long count = 0;
  for (const Exp& m : basis.monomials) {
    bool standard = true;
    for (const Polynomial& g : gb)
      if (expDivides(g.leading().exp, m)) { standard = false; break; }
    if (standard) ++count;
  }
  return count;
}

}  // namespace toricode
