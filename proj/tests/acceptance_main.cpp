// Acceptance suite: one pass/fail line per criterion, exact checks
// throughout (every asserted quantity is discrete, so tolerances are zero).

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "toricode/cli.hpp"
#include "toricode/codes.hpp"
#include "toricode/points.hpp"
#include "toricode/vanish.hpp"

using namespace toricode;
using namespace toricode::testsupport;

namespace {

int failures = 0;
int only = 0;

void criterion(int num, const std::string& name,
               const std::function<void(std::string&)>& body) {
  if (only != 0 && num != only) return;
  std::string detail;
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(detail);
  } catch (const std::exception& e) {
    detail = std::string("failed: exception: ") + e.what();
  }
  if (detail.rfind("failed", 0) == 0) ok = false;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("%s  [%2d] %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", num,
              name.c_str(), static_cast<long long>(ms), ok ? "" : " -- ",
              ok ? "" : detail.c_str());
  if (!ok) ++failures;
}

#define REQUIRE_OR(cond, msg)                    \
  do {                                           \
    if (!(cond)) {                               \
      detail = std::string("failed: ") + (msg);  \
      return;                                    \
    }                                            \
  } while (0)

ToricInstance paperInstance(int q) {
  return ToricInstance(q, hirzebruch2(), paperQ(), paperBeta());
}

std::vector<Polynomial> paperIdealGens(const ToricInstance& inst) {
  Ring cox = coxRing(inst);
  return {toBinomial(cox, intVec({5, 0, -5, 0})),
          toBinomial(cox, intVec({2, 1, 0, -1}))};
}

Int det2(const Int& a, const Int& b, const Int& c, const Int& d) {
  return a * d - b * c;
}

// gcd of all k x k minors via cofactor expansion (k <= 3); the independent
// determinantal-divisor oracle for the Smith form.
Int minorGcdDirect(const IntMat& m, int k) {
  Int g(0);
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> rs, cs;
  std::function<void(Eigen::Index, int)> overCols;
  std::function<void(Eigen::Index, int)> overRows;
  overCols = [&](Eigen::Index start, int left) {
    if (left == 0) {
      Int d(0);
      if (k == 1) {
        d = m(rs[0], cs[0]);
      } else if (k == 2) {
        d = det2(m(rs[0], cs[0]), m(rs[0], cs[1]), m(rs[1], cs[0]),
                 m(rs[1], cs[1]));
      } else {
        d = m(rs[0], cs[0]) * det2(m(rs[1], cs[1]), m(rs[1], cs[2]),
                                   m(rs[2], cs[1]), m(rs[2], cs[2])) -
            m(rs[0], cs[1]) * det2(m(rs[1], cs[0]), m(rs[1], cs[2]),
                                   m(rs[2], cs[0]), m(rs[2], cs[2])) +
            m(rs[0], cs[2]) * det2(m(rs[1], cs[0]), m(rs[1], cs[1]),
                                   m(rs[2], cs[0]), m(rs[2], cs[1]));
      }
      g = gcd(g, d);
      return;
    }
    for (Eigen::Index c = start; c + left <= cols; ++c) {
      cs.push_back(c);
      overCols(c + 1, left - 1);
      cs.pop_back();
    }
  };
  overRows = [&](Eigen::Index start, int left) {
    if (left == 0) {
      overCols(0, k);
      return;
    }
    for (Eigen::Index r = start; r + left <= rows; ++r) {
      rs.push_back(r);
      overRows(r + 1, left - 1);
      rs.pop_back();
    }
  };
  overRows(0, k);
  return abs(g);
}

bool snfOracle(const IntMat& m, const SnfResult& s) {
  if (!matEq(s.d, s.p * m * s.k)) return false;
  if (abs(detBareiss(s.p)) != Int(1)) return false;
  if (abs(detBareiss(s.k)) != Int(1)) return false;
  const Eigen::Index diag = std::min(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < s.d.rows(); ++i)
    for (Eigen::Index j = 0; j < s.d.cols(); ++j)
      if (i != j && !s.d(i, j).isZero()) return false;
  Int prod(1);
  for (Eigen::Index i = 0; i < diag; ++i) {
    const Int& di = s.d(i, i);
    if (di.isNegative()) return false;
    if (i + 1 < diag) {
      const Int& dn = s.d(i + 1, i + 1);
      if (di.isZero() && !dn.isZero()) return false;
      if (!di.isZero() && !(dn % di).isZero()) return false;
    }
    prod *= di;
    if (minorGcdDirect(m, static_cast<int>(i) + 1) != prod) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  // Optional single-criterion filter for debugging: ./acceptance <num>
  only = argc > 1 ? std::atoi(argv[1]) : 0;

  criterion(1, "paper ideal regression (H2, q=11, both methods, <10s)",
            [&](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    ToricInstance inst = paperInstance(11);
    Ring cox = coxRing(inst);
    VanishingIdealResult elim = idealViaElimination(inst);
    VanishingIdealResult lat = idealViaLattice(inst);
    REQUIRE_OR(idealEqual(cox, elim.generators, paperIdealGens(inst)),
               "elimination ideal != paper ideal");
    REQUIRE_OR(idealEqual(cox, lat.generators, paperIdealGens(inst)),
               "lattice ideal != paper ideal");
    std::ostringstream out, err;
    int code = runCli({"ideal", "--method", "both", "--input",
                       std::string(TORICODE_FIXTURES_DIR) + "/h2_q11.json"},
                      out, err);
    REQUIRE_OR(code == 0, "cmd_ideal exit code");
    REQUIRE_OR(out.str().find("ideals equal: yes") != std::string::npos,
               "cmd_ideal equality verdict");
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    REQUIRE_OR(secs < 10.0, "runtime over 10 s");
  });

  criterion(2, "lattice regression (L = HNF span{(2,1,0,-1),(-5,0,5,0)})",
            [&](std::string& detail) {
    Lattice expect(intMat({{2, -5}, {1, 0}, {0, 5}, {-1, 0}}));
    REQUIRE_OR(latticeL(paperInstance(11)) == expect, "lattice mismatch");
  });

  criterion(3, "length regression (count = snf = |points| = 5, |P| = 2)",
            [&](std::string& detail) {
    ToricInstance inst = paperInstance(11);
    REQUIRE_OR(lengthCount(inst) == 5, "length_count != 5");
    REQUIRE_OR(lengthSnf(inst) == Int(5), "length_snf != 5");
    REQUIRE_OR(enumeratePoints(inst).size() == 5, "|points| != 5");
    REQUIRE_OR(kernelSizeCount(inst) == 2, "|P| != 2");
  });

  criterion(4, "q=2 regression (lattice, ideal, colon condition holds)",
            [&](std::string& detail) {
    ToricInstance inst = paperInstance(2);
    Ring cox = coxRing(inst);
    Lattice expect(intMat({{-1, -2}, {0, -1}, {1, 0}, {0, 1}}));
    REQUIRE_OR(latticeL(inst) == expect, "lattice mismatch");
    std::vector<Polynomial> paper = {toBinomial(cox, intVec({1, 0, -1, 0})),
                                     toBinomial(cox, intVec({2, 1, 0, -1}))};
    REQUIRE_OR(idealEqual(cox, idealViaElimination(inst).generators, paper),
               "elimination ideal mismatch");
    REQUIRE_OR(idealEqual(cox, idealViaLattice(inst).generators, paper),
               "lattice ideal mismatch");
    REQUIRE_OR(latticeViaColon(inst).conditionHolds, "colon condition");
  });

  criterion(5, "colon condition fails at q=11", [&](std::string& detail) {
    REQUIRE_OR(!latticeViaColon(paperInstance(11)).conditionHolds,
               "condition unexpectedly holds");
  });

  criterion(6, "CI regression (mixed dominating, complete intersection yes)",
            [&](std::string& detail) {
    CiReport rep = completeIntersection(paperInstance(11));
    REQUIRE_OR(rep.mixed, "not mixed");
    REQUIRE_OR(rep.dominating, "not dominating");
    REQUIRE_OR(rep.completeIntersection, "not CI");
    std::ostringstream out, err;
    int code = runCli({"check-ci", "--input",
                       std::string(TORICODE_FIXTURES_DIR) + "/h2_q11.json"},
                      out, err);
    REQUIRE_OR(code == 0 && out.str().find("complete intersection: yes") !=
                                std::string::npos,
               "check-ci output");
  });

  criterion(7, "hilbert function at (-5,1) with section-5 beta equals 5 = rank",
            [&](std::string& detail) {
    ToricInstance inst(11, hirzebruch2(), paperQ(), snfBetaH2());
    auto ideal = idealViaLattice(inst);
    long long hf = hilbertFunction(inst, ideal.generators, intVec({-5, 1}));
    REQUIRE_OR(hf == 5, "hf != 5");
    GfMat ev = evaluationMatrix(inst, monomialsOfDegree(inst, intVec({-5, 1})));
    REQUIRE_OR(gfRank(inst.field(), ev) == 5, "rank != 5");
  });

  criterion(8, "property suite (224 random instances + special cases, <5 min)",
            [&](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    RandomInstances stream(0xACCE5501);
    std::mt19937 diagGen(0xD1A6);
    std::uniform_int_distribution<int> entry(-3, 3);
    int count = 0;
    for (int i = 0; i < 224; ++i) {
      ToricInstance inst = stream.next(i);
      ++count;
      Ring cox = coxRing(inst);

      VanishingIdealResult a = idealViaElimination(inst);
      VanishingIdealResult b = idealViaLattice(inst);
      REQUIRE_OR(a.generators.size() == b.generators.size(),
                 "route generator counts differ");
      for (std::size_t t = 0; t < a.generators.size(); ++t)
        REQUIRE_OR(polyEq(a.generators[t], b.generators[t]),
                   "route generators differ");

      auto pts = enumeratePoints(inst);
      for (const Polynomial& g : a.generators)
        for (const auto& p : pts)
          REQUIRE_OR(evalPoly(cox, g, p.coords) == 0,
                     "generator does not vanish");

      Lattice l = latticeL(inst);
      for (Eigen::Index j = 0; j < l.rank(); ++j)
        REQUIRE_OR(inL1(inst, l.basis().col(j)), "basis vector not in L1");

      REQUIRE_OR(latticeIndex(inst.kerBeta(), l) == lengthSnf(inst),
                 "index != length");

      if (i % 4 == 0) {
        IntMat qd = IntMat::Zero(inst.r(), inst.r());
        for (int t = 0; t < inst.r(); ++t) qd(t, t) = Int(entry(diagGen));
        ToricInstance diag(inst.field().q(), inst.phi(), qd);
        REQUIRE_OR(latticeDegenerate(diag) == latticeL(diag),
                   "degenerate lattice mismatch");
      }
    }
    for (const IntMat& phi : fanCatalog())
      for (int q : {2, 3, 4, 5, 7, 8, 9, 11}) {
        ToricInstance torus(q, phi, IntMat::Identity(phi.rows(), phi.rows()));
        REQUIRE_OR(latticeL(torus) == latticeScaled(torus.kerBeta(), Int(q - 1)),
                   "I(T_X) corollary fails");
        IntMat beta = deriveBeta(phi);
        ToricInstance one(q, phi, beta);
        REQUIRE_OR(latticeL(one) == one.kerBeta(), "I([1]) corollary fails");
        REQUIRE_OR(enumeratePoints(one).size() == 1, "Y_beta is not a point");
      }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (secs >= 300.0) {
      detail = "failed: over 5 minutes";
      return;
    }
    std::ostringstream msg;
    msg << count << " instances";
    detail = msg.str();
  });

  criterion(9, "code-parameter suite (hf = rank, bounds, invariance)",
            [&](std::string& detail) {
    RandomInstances stream(0xACCE5501);  // same instance stream as [8]
    std::mt19937 gen(0xC0DE);
    std::uniform_int_distribution<int> mdeg(0, 2);
    for (int i = 0; i < 224; ++i) {
      ToricInstance inst = stream.next(i);
      auto ideal = idealViaLattice(inst);
      auto pts = enumeratePoints(inst);
      for (int trial = 0; trial < 2; ++trial) {
        IntVec m(inst.r());
        for (int c = 0; c < inst.r(); ++c) m(c) = Int(mdeg(gen));
        IntVec alpha = inst.beta() * m;
        MonomialBasis basis = monomialsOfDegree(inst, alpha);
        GfMat ev = evaluationMatrixAt(inst, basis, pts);
        int rank = gfRank(inst.field(), ev);
        REQUIRE_OR(hilbertFunction(inst, ideal.generators, alpha) == rank,
                   "hf != rank");
        REQUIRE_OR(rank <= static_cast<int>(pts.size()), "k > N");
        REQUIRE_OR(rank <= static_cast<int>(basis.monomials.size()),
                   "k > |S_alpha|");
        long long qk = 1;
        bool small = rank > 0;
        for (int t = 0; t < rank && small; ++t) {
          qk *= inst.field().q();
          if (qk > 2000) small = false;
        }
        std::optional<long long> dist;
        if (small) {
          dist = minimumDistance(inst, ev);
          REQUIRE_OR(dist.has_value() && *dist >= 1 &&
                         *dist <= static_cast<long long>(pts.size()) - rank + 1,
                     "Singleton bound violated");
        }
        auto twisted = pts;
        for (auto& p : twisted) {
          auto g = randomKernelElement(inst, gen);
          for (int c = 0; c < inst.r(); ++c)
            p.coords[static_cast<std::size_t>(c)] =
                inst.field().mul(p.coords[static_cast<std::size_t>(c)],
                                 g[static_cast<std::size_t>(c)]);
        }
        GfMat ev2 = evaluationMatrixAt(inst, basis, twisted);
        REQUIRE_OR(gfRank(inst.field(), ev2) == rank,
                   "rank changed under representative change");
        if (small)
          REQUIRE_OR(minimumDistance(inst, ev2) == dist,
                     "distance changed under representative change");
      }
    }
  });

  criterion(10, "oracle checks (HNF/SNF exhaustive to 3x3, kernels, GF tables)",
            [&](std::string& detail) {
    for (int rows = 1; rows <= 3; ++rows)
      for (int cols = 1; cols <= 3; ++cols) {
        const int cells = rows * cols;
        long long total = 1;
        for (int i = 0; i < cells; ++i) total *= 5;
        std::vector<int> digits(static_cast<std::size_t>(cells), 0);
        IntMat m(rows, cols);
        for (long long it = 0; it < total; ++it) {
          long long v = it;
          for (int i = 0; i < cells; ++i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(v % 5) - 2;
            v /= 5;
          }
          for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
              m(i, j) = Int(digits[static_cast<std::size_t>(i * cols + j)]);
          if (!checkHnfContract(m, hnf(m))) {
            detail = "failed: HNF contract";
            return;
          }
          if (!snfOracle(m, snf(m))) {
            detail = "failed: SNF oracle";
            return;
          }
        }
      }

    {
      std::vector<IntMat> cases;
      for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
          for (int c = -2; c <= 2; ++c) {
            cases.push_back(intMat({{a, b, c}}));
            cases.push_back(intMat({{a, b}, {b, c}}));
          }
      for (const IntMat& m : cases) {
        IntMat kb = kernelBasis(m);
        if (!isZeroMat(m * kb)) {
          detail = "failed: kernel equation";
          return;
        }
        Lattice ker(kb);
        IntVec v(m.cols());
        std::vector<int> box(static_cast<std::size_t>(m.cols()), -2);
        for (;;) {
          for (Eigen::Index i = 0; i < m.cols(); ++i)
            v(i) = Int(box[static_cast<std::size_t>(i)]);
          if (latticeContains(ker, v) != isZeroVec(m * v)) {
            detail = "failed: kernel membership";
            return;
          }
          Eigen::Index pos = m.cols() - 1;
          while (pos >= 0 && box[static_cast<std::size_t>(pos)] == 2) {
            box[static_cast<std::size_t>(pos)] = -2;
            --pos;
          }
          if (pos < 0) break;
          ++box[static_cast<std::size_t>(pos)];
        }
      }
    }

    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
      Field f(q);
      const int p = f.p(), k = f.k();
      auto unpack = [&](int e) {
        std::vector<int> c(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
          c[static_cast<std::size_t>(i)] = e % p;
          e /= p;
        }
        return c;
      };
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          auto pa = unpack(a);
          auto pb = unpack(b);
          std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
              prod[static_cast<std::size_t>(i + j)] =
                  (prod[static_cast<std::size_t>(i + j)] +
                   pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)]) %
                  p;
          for (int dg = 2 * k - 2; dg >= k; --dg) {
            int top = prod[static_cast<std::size_t>(dg)];
            if (top == 0) continue;
            prod[static_cast<std::size_t>(dg)] = 0;
            for (int i = 0; i < k; ++i) {
              int& cell = prod[static_cast<std::size_t>(dg - k + i)];
              cell = ((cell - top * f.modulus()[static_cast<std::size_t>(i)]) % p + p) % p;
            }
          }
          long long packed = 0;
          for (int i = k - 1; i >= 0; --i)
            packed = packed * p + prod[static_cast<std::size_t>(i)];
          if (f.mul(static_cast<Field::Elem>(a), static_cast<Field::Elem>(b)) !=
              packed) {
            detail = "failed: GF table mismatch";
            return;
          }
        }
    }
  });

  std::printf("%s: %d criteria failed\n",
              failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failures);
  return failures;
}
