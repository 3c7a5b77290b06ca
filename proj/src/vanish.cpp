#include "toricode/vanish.hpp"

namespace toricode {

Ring coxRing(const ToricInstance& inst) {
  return makeLexRing(inst.field(), inst.r());
}

const char* idealMethodName(IdealMethod m) {
  switch (m) {
    case IdealMethod::Elimination: return "elimination";
    case IdealMethod::LatticeSaturation: return "lattice";
    case IdealMethod::ColonShortcut: return "colon-shortcut";
    case IdealMethod::Degenerate: return "degenerate";
  }
  return "?";
}

namespace {

// Restrict x-only polynomials of the extended ring back into S.
std::vector<Polynomial> restrictToCox(const Ring& cox,
                                      const std::vector<Polynomial>& polys,
                                      int r) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const Polynomial& p : polys) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const Term& t : p.terms())
      terms.push_back({t.coef, Exp(t.exp.head(r))});
    out.push_back(Polynomial::fromTerms(cox, std::move(terms)));
  }
  return out;
}

}  // namespace

VanishingIdealResult idealViaElimination(const ToricInstance& inst) {
  const int r = inst.r(), s = inst.s(), d = inst.d();
  const Field& fld = inst.field();
  const int q = fld.q();

  // R = K[x_1..x_r, y_1..y_s, z_1..z_d, w], lex w > z_1 > ... > z_d >
  // y_1 > ... > y_s > x_1 > ... > x_r.
  Ring big;
  big.field = &fld;
  big.nvars = r + s + d + 1;
  for (int i = 0; i < r; ++i) big.names.push_back("x_" + std::to_string(i + 1));
  for (int i = 0; i < s; ++i) big.names.push_back("y_" + std::to_string(i + 1));
  for (int i = 0; i < d; ++i) big.names.push_back("z_" + std::to_string(i + 1));
  big.names.push_back("w");
  big.order.priority.push_back(r + s + d);                      // w
  for (int i = 0; i < d; ++i) big.order.priority.push_back(r + s + i);
  for (int i = 0; i < s; ++i) big.order.priority.push_back(r + i);
  for (int i = 0; i < r; ++i) big.order.priority.push_back(i);

  const Field::Elem one = fld.one();
  const Field::Elem mone = fld.neg(one);

  std::vector<Polynomial> gens;
  Exp hExp = zeroExp(big.nvars);  // exponent of h = prod_i y^{q_i^-} z^{beta_i^-}
  for (int i = 0; i < r; ++i) {
    // x_i y^{q_i^-} z^{beta_i^-} - y^{q_i^+} z^{beta_i^+}
    Exp pos = zeroExp(big.nvars), neg = zeroExp(big.nvars);
    pos(i) = 1;
    for (int j = 0; j < s; ++j) {
      std::int64_t v = inst.qmat()(j, i).toInt64();
      if (v < 0) pos(r + j) = -v;
      else neg(r + j) = v;
    }
    for (int j = 0; j < d; ++j) {
      std::int64_t v = inst.beta()(j, i).toInt64();
      if (v < 0) pos(r + s + j) = -v;
      else neg(r + s + j) = v;
    }
    hExp += pos;
    hExp(i) = 0;  // h has no x part
    std::vector<Term> terms;
    terms.push_back({one, pos});
    terms.push_back({mone, neg});
    gens.push_back(Polynomial::fromTerms(big, std::move(terms)));
  }
  for (int i = 0; i < s; ++i) {
    // y_i^{q-1} - 1
    Exp e = zeroExp(big.nvars);
    e(r + i) = q - 1;
    std::vector<Term> terms;
    terms.push_back({one, e});
    terms.push_back({mone, zeroExp(big.nvars)});
    gens.push_back(Polynomial::fromTerms(big, std::move(terms)));
  }
  {
    // w * h - 1
    Exp e = hExp;
    e(r + s + d) = 1;
    std::vector<Term> terms;
    terms.push_back({one, e});
    terms.push_back({mone, zeroExp(big.nvars)});
    gens.push_back(Polynomial::fromTerms(big, std::move(terms)));
  }

  std::vector<int> drop;
  for (int v = r; v < big.nvars; ++v) drop.push_back(v);
  std::vector<Polynomial> kept =
      eliminateVars(big, gens, drop, inst.guards().groebnerCap);

  VanishingIdealResult res;
  res.method = IdealMethod::Elimination;
  res.generators = restrictToCox(coxRing(inst), kept, r);
  return res;
}

IntMat latticeLBasisRaw(const ToricInstance& inst) {
  const int n = inst.n(), s = inst.s();
  const Int m(inst.field().q() - 1);
  IntMat block(s, n + s);
  block.leftCols(n) = inst.qphi();
  IntMat scaled = IntMat::Identity(s, s);
  for (int i = 0; i < s; ++i) scaled(i, i) = m;
  block.rightCols(s) = scaled;
  IntMat ker = kernelBasis(block);
  return inst.phi() * ker.topRows(n);
}

Lattice latticeL(const ToricInstance& inst) {
  return Lattice(inst.r(), latticeLBasisRaw(inst));
}

bool inL1(const ToricInstance& inst, const IntVec& m) {
  if (m.size() != inst.r()) throw inputError("inL1: length mismatch");
  if (!latticeContains(inst.kerBeta(), m)) return false;
  const Int modulus(inst.field().q() - 1);
  IntVec qm = inst.qmat() * m;
  for (Eigen::Index i = 0; i < qm.size(); ++i)
    if (!mod(qm(i), modulus).isZero()) return false;
  return true;
}

VanishingIdealResult idealViaLattice(const ToricInstance& inst) {
  Ring cox = coxRing(inst);
  IntMat basis = latticeLBasisRaw(inst);
  std::vector<Polynomial> gens;
  for (Eigen::Index j = 0; j < basis.cols(); ++j)
    gens.push_back(toBinomial(cox, basis.col(j)));
  for (int v = 0; v < inst.r(); ++v) {
    Exp e = zeroExp(inst.r());
    e(v) = 1;
    std::vector<Term> terms;
    terms.push_back({inst.field().one(), e});
    Polynomial xv = Polynomial::fromTerms(cox, std::move(terms));
    gens = saturate(cox, gens, xv, inst.guards().groebnerCap);
  }
  VanishingIdealResult res;
  res.method = IdealMethod::LatticeSaturation;
  res.generators = buchberger(cox, gens, inst.guards().groebnerCap);
  res.lattice = Lattice(inst.r(), basis);
  return res;
}

ColonShortcut latticeViaColon(const ToricInstance& inst) {
  const Int m(inst.field().q() - 1);
  Lattice lq(kernelBasis(inst.qmat()));
  const Lattice& lbeta = inst.kerBeta();
  Lattice inner = latticeIntersect(lq, lbeta);
  Lattice sum = latticeSum(inner, latticeScaled(lbeta, m));
  Lattice script = imageLattice(inst.qphi());  // QL_beta inside Z^s
  ColonShortcut out{sum, script == latticeColonInt(script, m)};
  return out;
}

bool isQHomogeneous(const ToricInstance& inst) {
  IntMat lq = kernelBasis(inst.qmat());
  for (Eigen::Index j = 0; j < lq.cols(); ++j)
    if (!latticeContains(inst.kerBeta(), lq.col(j))) return false;
  return true;
}

Lattice latticeDegenerate(const ToricInstance& inst) {
  const int r = inst.r();
  if (inst.s() != r)
    throw unsupportedError("degenerate torus requires a square diagonal Q");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && !inst.qmat()(i, j).isZero())
        throw unsupportedError("degenerate torus requires a diagonal Q");
  const Int m(inst.field().q() - 1);
  IntMat dmat = IntMat::Identity(r, r);
  for (int i = 0; i < r; ++i) {
    Int residue = mod(inst.qmat()(i, i), m);
    // order of eta^{q_i}: 1 when the exponent vanishes mod q-1
    dmat(i, i) = residue.isZero() ? Int(1) : divExact(m, gcd(m, residue));
  }
  IntMat ker = kernelBasis(inst.beta() * dmat);
  return Lattice(r, dmat * ker);
}

bool isMixed(const IntMat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    bool pos = false, neg = false;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      int s = m(i, j).sign();
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (!pos || !neg) return false;
  }
  return true;
}

bool isDominating(const IntMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  if (rows > 16 || cols > 16)
    throw guardError("dominating test size guard exceeded");
  // A mixed k x k submatrix on row set S exists iff at least |S| columns
  // are mixed when restricted to S; 1 x 1 submatrices are never mixed.
  for (unsigned mask = 1; mask < (1u << rows); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 2 || k > cols) continue;
    int mixedCols = 0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      bool pos = false, neg = false;
      for (Eigen::Index i = 0; i < rows; ++i) {
        if (!(mask & (1u << i))) continue;
        int s = m(i, j).sign();
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (pos && neg) ++mixedCols;
    }
    if (mixedCols >= k) return false;
  }
  return true;
}

CiReport completeIntersection(const ToricInstance& inst) {
  if (!inst.complete())
    throw unsupportedError(
        "complete-intersection test: L cap N^r = {0} unverified (fan not "
        "complete)");
  CiReport rep;
  rep.basis = latticeLBasisRaw(inst);

  // Belt over the completeness certificate: look for a nonzero nonnegative
  // vector among small coefficient combinations of the basis.
  const Eigen::Index k = rep.basis.cols();
  if (k > 0) {
    const long long bound = 10;
    long long combos = 1;
    for (Eigen::Index i = 0; i < k; ++i) {
      combos *= 2 * bound + 1;
      if (combos > inst.guards().enumerationCap) break;
    }
    if (combos <= inst.guards().enumerationCap) {
      std::vector<long long> c(static_cast<std::size_t>(k), -bound);
      for (;;) {
        IntVec v = IntVec::Zero(inst.r());
        bool allZero = true;
        for (Eigen::Index j = 0; j < k; ++j) {
          if (c[static_cast<std::size_t>(j)] != 0) allZero = false;
          for (Eigen::Index i = 0; i < inst.r(); ++i)
            v(i) += Int(c[static_cast<std::size_t>(j)]) * rep.basis(i, j);
        }
        if (!allZero) {
          bool nonneg = true, nonzero = false;
          for (Eigen::Index i = 0; i < inst.r(); ++i) {
            if (v(i).isNegative()) { nonneg = false; break; }
            if (!v(i).isZero()) nonzero = true;
          }
          if (nonneg && nonzero)
            throw unsupportedError(
                "complete-intersection test: found a nonzero nonnegative "
                "lattice vector, L cap N^r != {0}");
        }
        Eigen::Index pos = k - 1;
        while (pos >= 0 && c[static_cast<std::size_t>(pos)] == bound) {
          c[static_cast<std::size_t>(pos)] = -bound;
          --pos;
        }
        if (pos < 0) break;
        ++c[static_cast<std::size_t>(pos)];
      }
    }
  }

  rep.mixed = isMixed(rep.basis);
  rep.dominating = isDominating(rep.basis);
  rep.completeIntersection = rep.mixed && rep.dominating;
  rep.anomaly = rep.dominating && !rep.mixed;
  return rep;
}

}  // namespace toricode
