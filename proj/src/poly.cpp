#include "toricode/poly.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace toricode {

Exp zeroExp(int nvars) { return Exp::Zero(nvars); }

Exp toExp(const IntVec& v) {
  Exp e(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) e(i) = v(i).toInt64();
  return e;
}

bool expEq(const Exp& a, const Exp& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool expDivides(const Exp& a, const Exp& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) > b(i)) return false;
  return true;
}

bool expCoprime(const Exp& a, const Exp& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) > 0 && b(i) > 0) return false;
  return true;
}

Exp expLcm(const Exp& a, const Exp& b) {
  Exp e(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) e(i) = std::max(a(i), b(i));
  return e;
}

MonomialOrder MonomialOrder::lex(int nvars) {
  MonomialOrder ord;
  ord.priority.resize(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) ord.priority[static_cast<std::size_t>(i)] = i;
  return ord;
}

int cmpExp(const MonomialOrder& ord, const Exp& a, const Exp& b) {
  for (int v : ord.priority) {
    if (a(v) != b(v)) return a(v) > b(v) ? 1 : -1;
  }
  return 0;
}

Ring makeLexRing(const Field& field, int nvars, const std::string& prefix) {
  Ring ring;
  ring.field = &field;
  ring.order = MonomialOrder::lex(nvars);
  ring.nvars = nvars;
  ring.names.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i)
    ring.names.push_back(prefix + "_" + std::to_string(i + 1));
  return ring;
}

Polynomial Polynomial::fromTerms(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return cmpExp(ring.order, a.exp, b.exp) > 0;
  });
  Polynomial p(ring.nvars);
  for (Term& t : terms) {
    if (t.coef == 0) continue;
    if (!p.terms_.empty() && expEq(p.terms_.back().exp, t.exp)) {
      p.terms_.back().coef = ring.field->add(p.terms_.back().coef, t.coef);
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool polyEq(const Polynomial& a, const Polynomial& b) {
  if (a.terms().size() != b.terms().size()) return false;
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    if (a.terms()[i].coef != b.terms()[i].coef) return false;
    if (!expEq(a.terms()[i].exp, b.terms()[i].exp)) return false;
  }
  return true;
}

// a + c * b, merging two descending term lists.
Polynomial polyAddImpl(const Ring& ring, const Polynomial& a,
                       const Polynomial& b, Field::Elem c) {
  Polynomial out(ring.nvars);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  const Field& f = *ring.field;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int cmp;
    if (i >= a.terms_.size()) cmp = -1;
    else if (j >= b.terms_.size()) cmp = 1;
    else cmp = cmpExp(ring.order, a.terms_[i].exp, b.terms_[j].exp);
    if (cmp > 0) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (cmp < 0) {
      Field::Elem v = f.mul(c, b.terms_[j].coef);
      if (v != 0) out.terms_.push_back({v, b.terms_[j].exp});
      ++j;
    } else {
      Field::Elem v = f.add(a.terms_[i].coef, f.mul(c, b.terms_[j].coef));
      if (v != 0) out.terms_.push_back({v, a.terms_[i].exp});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial polyAdd(const Ring& ring, const Polynomial& a, const Polynomial& b) {
  return polyAddImpl(ring, a, b, ring.field->one());
}

Polynomial polySub(const Ring& ring, const Polynomial& a, const Polynomial& b) {
  return polyAddImpl(ring, a, b, ring.field->neg(ring.field->one()));
}

Polynomial polyMulMonomial(const Ring& ring, const Polynomial& p,
                           Field::Elem c, const Exp& shift) {
  Polynomial out(ring.nvars);
  if (c == 0) return out;
  out.terms_.reserve(p.terms_.size());
  for (const Term& t : p.terms_) {
    Field::Elem v = ring.field->mul(c, t.coef);
    if (v != 0) out.terms_.push_back({v, t.exp + shift});
  }
  return out;
}

Polynomial makeMonic(const Ring& ring, const Polynomial& p) {
  if (p.isZero()) return p;
  Field::Elem lc = p.leading().coef;
  if (lc == ring.field->one()) return p;
  return polyMulMonomial(ring, p, ring.field->inv(lc), zeroExp(ring.nvars));
}

Polynomial toBinomial(const Ring& ring, const IntVec& v) {
  if (v.size() != ring.nvars) throw inputError("toBinomial: length mismatch");
  Exp plus = zeroExp(ring.nvars), minus = zeroExp(ring.nvars);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::int64_t x = v(i).toInt64();
    if (x > 0) plus(i) = x;
    else minus(i) = -x;
  }
  std::vector<Term> terms;
  terms.push_back({ring.field->one(), plus});
  terms.push_back({ring.field->neg(ring.field->one()), minus});
  return Polynomial::fromTerms(ring, std::move(terms));
}

Polynomial normalForm(const Ring& ring, Polynomial f,
                      const std::vector<Polynomial>& gs) {
  std::vector<Term> remainder;
  while (!f.isZero()) {
    const Term& lt = f.leading();
    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : gs) {
      if (!g.isZero() && expDivides(g.leading().exp, lt.exp)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      Field::Elem c = ring.field->mul(
          lt.coef, ring.field->inv(reducer->leading().coef));
      Exp shift = lt.exp - reducer->leading().exp;
      f = polyAddImpl(ring, f, polyMulMonomial(ring, *reducer, ring.field->one(), shift),
                      ring.field->neg(c));
    } else {
      remainder.push_back(lt);
      std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
      Polynomial tail(ring.nvars);
      tail = Polynomial::fromTerms(ring, std::move(rest));
      f = std::move(tail);
    }
  }
  return Polynomial::fromTerms(ring, std::move(remainder));
}

namespace {

Polynomial sPolynomial(const Ring& ring, const Polynomial& f,
                       const Polynomial& g) {
  const Exp lcm = expLcm(f.leading().exp, g.leading().exp);
  const Field& fld = *ring.field;
  Polynomial a = polyMulMonomial(ring, f, fld.inv(f.leading().coef),
                                 lcm - f.leading().exp);
  Polynomial b = polyMulMonomial(ring, g, fld.inv(g.leading().coef),
                                 lcm - g.leading().exp);
  return polySub(ring, a, b);
}

// Inter-reduction of a basis with pairwise behavior already settled:
// keep minimal leading monomials, tail-reduce, sort ascending.
std::vector<Polynomial> reduceBasis(const Ring& ring,
                                    std::vector<Polynomial> basis) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].isZero()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || basis[j].isZero()) continue;
      if (expDivides(basis[j].leading().exp, basis[i].leading().exp)) {
        // Strict divisor wins; among equal leading monomials the earlier
        // generator survives.
        if (!expEq(basis[j].leading().exp, basis[i].leading().exp) || j < i) {
          redundant = true;
          break;
        }
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normalForm(ring, minimal[i], others);
    if (!r.isZero()) reduced.push_back(makeMonic(ring, r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return cmpExp(ring.order, a.leading().exp, b.leading().exp) < 0;
            });
  return reduced;
}

}  // namespace

std::vector<Polynomial> buchberger(const Ring& ring,
                                   const std::vector<Polynomial>& gens,
                                   int basisCap) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens)
    if (!g.isZero()) basis.push_back(makeMonic(ring, g));
  if (basis.empty()) return {};

  struct Pair {
    Exp lcm;
    std::size_t i, j;  // i < j
  };
  struct PairCmp {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      int c = cmpExp(*order, a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<Pair, PairCmp> queue(PairCmp{&ring.order});

  // Gebauer-Moller update: prune the pending set against the new leading
  // monomial, then enqueue only the minimal new pairs.
  auto addPairsFor = [&](std::size_t t) {
    const Exp& lmT = basis[t].leading().exp;
    for (auto it = queue.begin(); it != queue.end();) {
      const Exp lcmIT = expLcm(basis[it->i].leading().exp, lmT);
      const Exp lcmJT = expLcm(basis[it->j].leading().exp, lmT);
      if (expDivides(lmT, it->lcm) && !expEq(lcmIT, it->lcm) &&
          !expEq(lcmJT, it->lcm))
        it = queue.erase(it);
      else
        ++it;
    }
    struct Cand {
      Exp lcm;
      std::size_t i;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
      const Exp& lmI = basis[i].leading().exp;
      cands.push_back({expLcm(lmI, lmT), i, expCoprime(lmI, lmT)});
    }
    std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
      int c = cmpExp(ring.order, a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return a.i < b.i;
    });
    std::vector<Cand> kept;
    for (const Cand& c : cands) {
      bool shadowed = false;
      for (const Cand& k : kept)
        if (expDivides(k.lcm, c.lcm)) { shadowed = true; break; }
      if (!shadowed) kept.push_back(c);
    }
    for (const Cand& k : kept)
      if (!k.coprime) queue.insert({k.lcm, k.i, t});
  };
  for (std::size_t k = 1; k < basis.size(); ++k) addPairsFor(k);

  const bool trace = std::getenv("TORICODE_GB_TRACE") != nullptr;
  long long pops = 0;
  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    if (trace && ++pops % 1000 == 0)
      std::fprintf(stderr, "gb: pops=%lld basis=%zu queue=%zu\n", pops,
                   basis.size(), queue.size());

    Polynomial s = sPolynomial(ring, basis[pr.i], basis[pr.j]);
    Polynomial h = normalForm(ring, std::move(s), basis);
    if (h.isZero()) continue;
    basis.push_back(makeMonic(ring, h));
    if (static_cast<int>(basis.size()) > basisCap)
      throw guardError("Groebner basis size guard exceeded");
    addPairsFor(basis.size() - 1);
  }
  return reduceBasis(ring, std::move(basis));
}

std::vector<Polynomial> eliminateVars(const Ring& ring,
                                      const std::vector<Polynomial>& gens,
                                      const std::vector<int>& dropVars,
                                      int basisCap) {
  std::vector<char> dropped(static_cast<std::size_t>(ring.nvars), 0);
  for (int v : dropVars) {
    if (v < 0 || v >= ring.nvars) throw inputError("eliminateVars: bad index");
    dropped[static_cast<std::size_t>(v)] = 1;
  }
  // All dropped variables must precede all kept ones in the priority list.
  bool seenKept = false;
  for (int v : ring.order.priority) {
    if (dropped[static_cast<std::size_t>(v)]) {
      if (seenKept)
        throw inputError(
            "eliminateVars: order does not rank dropped variables highest");
    } else {
      seenKept = true;
    }
  }
  std::vector<Polynomial> gb = buchberger(ring, gens, basisCap);
  std::vector<Polynomial> out;
  for (const Polynomial& p : gb) {
    bool pure = true;
    for (const Term& t : p.terms())
      for (int v : dropVars)
        if (t.exp(v) != 0) { pure = false; break; }
    if (pure) out.push_back(p);
  }
  return out;
}

std::vector<Polynomial> saturate(const Ring& ring,
                                 const std::vector<Polynomial>& gens,
                                 const Polynomial& f, int basisCap) {
  // Extended ring with u ranked above everything.
  Ring ext;
  ext.field = ring.field;
  ext.nvars = ring.nvars + 1;
  ext.order.priority.reserve(static_cast<std::size_t>(ext.nvars));
  ext.order.priority.push_back(ring.nvars);
  for (int v : ring.order.priority) ext.order.priority.push_back(v);
  ext.names = ring.names;
  ext.names.push_back("u");

  auto lift = [&](const Polynomial& p) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
      Exp e(ext.nvars);
      e.head(ring.nvars) = t.exp;
      e(ring.nvars) = 0;
      terms.push_back({t.coef, e});
    }
    return Polynomial::fromTerms(ext, std::move(terms));
  };

  std::vector<Polynomial> extGens;
  for (const Polynomial& g : gens) extGens.push_back(lift(g));
  Exp u = zeroExp(ext.nvars);
  u(ring.nvars) = 1;
  Polynomial uf = polyMulMonomial(ext, lift(f), ring.field->one(), u);
  std::vector<Term> one;
  one.push_back({ring.field->one(), zeroExp(ext.nvars)});
  extGens.push_back(polySub(ext, uf, Polynomial::fromTerms(ext, std::move(one))));

  std::vector<Polynomial> eliminated =
      eliminateVars(ext, extGens, {ring.nvars}, basisCap);
  std::vector<Polynomial> out;
  out.reserve(eliminated.size());
  for (const Polynomial& p : eliminated) {
    std::vector<Term> terms;
    for (const Term& t : p.terms())
      terms.push_back({t.coef, Exp(t.exp.head(ring.nvars))});
    out.push_back(Polynomial::fromTerms(ring, std::move(terms)));
  }
  return out;
}

bool idealEqual(const Ring& ring, const std::vector<Polynomial>& a,
                const std::vector<Polynomial>& b, int basisCap) {
  std::vector<Polynomial> ga = buchberger(ring, a, basisCap);
  std::vector<Polynomial> gb = buchberger(ring, b, basisCap);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!polyEq(ga[i], gb[i])) return false;
  return true;
}

bool isHomogeneousBinomial(const IntMat& beta, const IntVec& a,
                           const IntVec& b) {
  if (a.size() != beta.cols() || b.size() != beta.cols())
    throw inputError("isHomogeneousBinomial: length mismatch");
  return isZeroVec(beta * (a - b));
}

Field::Elem evalPoly(const Ring& ring, const Polynomial& p,
                     const std::vector<Field::Elem>& coords) {
  if (static_cast<int>(coords.size()) != ring.nvars)
    throw inputError("evalPoly: coordinate count mismatch");
  const Field& f = *ring.field;
  Field::Elem acc = 0;
  for (const Term& t : p.terms()) {
    Field::Elem v = t.coef;
    for (int i = 0; i < ring.nvars; ++i)
      if (t.exp(i) != 0) v = f.mul(v, f.pow(coords[static_cast<std::size_t>(i)], t.exp(i)));
    acc = f.add(acc, v);
  }
  return acc;
}

std::string polyToString(const Ring& ring, const Polynomial& p) {
  if (p.isZero()) return "0";
  const Field& f = *ring.field;
  std::ostringstream os;
  bool first = true;
  for (const Term& t : p.terms()) {
    bool isConstant = true;
    for (int i = 0; i < ring.nvars; ++i)
      if (t.exp(i) != 0) { isConstant = false; break; }
    bool minus = !(t.coef == f.one()) && t.coef == f.neg(f.one());
    if (first) {
      if (minus) os << "-";
      first = false;
    } else {
      os << (minus ? " - " : " + ");
    }
    Field::Elem mag = minus ? f.neg(t.coef) : t.coef;
    bool needCoef = isConstant || mag != f.one();
    if (needCoef) os << static_cast<int>(mag);
    bool firstVar = !needCoef;
    for (int i = 0; i < ring.nvars; ++i) {
      if (t.exp(i) == 0) continue;
      if (!firstVar) os << "*";
      firstVar = false;
      os << ring.names[static_cast<std::size_t>(i)];
      if (t.exp(i) != 1) os << "^" << t.exp(i);
    }
  }
  return os.str();
}

}  // namespace toricode
