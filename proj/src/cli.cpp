#include "toricode/cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricode/codes.hpp"
#include "toricode/instance_io.hpp"
#include "toricode/points.hpp"
#include "toricode/vanish.hpp"

namespace toricode {

namespace {

using nlohmann::json;

// Prime fields print residues; extension fields print discrete logs with
// -1 for zero.
long long renderElem(const Field& f, Field::Elem e) {
  if (f.k() == 1) return e;
  return e == 0 ? -1 : f.dlog(e);
}

json matrixToJson(const IntMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).toInt64());
    rows.push_back(std::move(row));
  }
  return rows;
}

json vectorToJson(const IntVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).toInt64());
  return a;
}

json gfMatrixToJson(const Field& f, const GfMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(renderElem(f, static_cast<Field::Elem>(m(i, j))));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string gfMatrixToString(const Field& f, const GfMat& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << renderElem(f, static_cast<Field::Elem>(m(i, j)));
    }
    os << "]\n";
  }
  return os.str();
}

json polysToJson(const Ring& ring, const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const Polynomial& p : ps) {
    json terms = json::array();
    for (const Term& t : p.terms()) {
      json exp = json::array();
      for (int v = 0; v < ring.nvars; ++v) exp.push_back(t.exp(v));
      terms.push_back(json{{"coef", t.coef}, {"exp", std::move(exp)}});
    }
    out.push_back(json{{"terms", std::move(terms)},
                       {"text", polyToString(ring, p)}});
  }
  return out;
}

std::string orderString(const Ring& ring) {
  std::string s = "lex ";
  for (std::size_t i = 0; i < ring.names.size(); ++i) {
    if (i) s += " > ";
    s += ring.names[static_cast<std::size_t>(
        ring.order.priority[i])];
  }
  return s;
}

struct Report {
  bool jsonMode = false;
  json j;
  std::ostringstream text;

  std::string finish() {
    if (jsonMode) return j.dump(2) + "\n";
    return text.str();
  }
};

void emitHeader(Report& rep, const ToricInstance& inst) {
  Ring cox = coxRing(inst);
  if (rep.jsonMode) {
    rep.j["q"] = inst.field().q();
    rep.j["beta"] = matrixToJson(inst.beta());
    rep.j["betaSource"] = inst.betaSupplied() ? "supplied" : "derived";
    rep.j["order"] = orderString(cox);
  } else {
    rep.text << "q = " << inst.field().q() << "\n";
    rep.text << "beta (" << (inst.betaSupplied() ? "supplied" : "derived")
             << "):\n"
             << matToString(inst.beta());
    rep.text << "order: " << orderString(cox) << "\n";
  }
}

void emitIdeal(Report& rep, const ToricInstance& inst,
               const VanishingIdealResult& res, const char* key) {
  Ring cox = coxRing(inst);
  if (rep.jsonMode) {
    json block;
    block["method"] = idealMethodName(res.method);
    block["generators"] = polysToJson(cox, res.generators);
    if (res.lattice) block["lattice"] = matrixToJson(res.lattice->basis());
    rep.j[key] = std::move(block);
  } else {
    rep.text << "method: " << idealMethodName(res.method) << "\n";
    rep.text << "generators (reduced Groebner basis, " << res.generators.size()
             << "):\n";
    for (const Polynomial& p : res.generators)
      rep.text << "  " << polyToString(cox, p) << "\n";
  }
}

IntVec requireAlpha(const InstanceFile& file, const ToricInstance& inst) {
  if (!file.alpha) throw inputError("this command needs \"alpha\" in the input file");
  if (file.alpha->size() != inst.d())
    throw inputError("alpha must have length d = r - n");
  return *file.alpha;
}

int dispatch(const std::string& cmd, const InstanceFile& file, bool jsonMode,
             const std::string& method, bool shortcut, bool distance,
             std::ostream& out) {
  ToricInstance inst = file.toInstance();
  Report rep;
  rep.jsonMode = jsonMode;
  emitHeader(rep, inst);

  if (cmd == "ideal") {
    std::optional<VanishingIdealResult> elim, lat;
    if (method == "elim" || method == "both") {
      elim = idealViaElimination(inst);
      emitIdeal(rep, inst, *elim, "elimination");
    }
    if (method == "lattice" || method == "both") {
      lat = idealViaLattice(inst);
      emitIdeal(rep, inst, *lat, "lattice");
    }
    if (method == "both") {
      bool equal = elim->generators.size() == lat->generators.size();
      for (std::size_t i = 0; equal && i < elim->generators.size(); ++i)
        equal = polyEq(elim->generators[i], lat->generators[i]);
      if (jsonMode) rep.j["equal"] = equal;
      else rep.text << "ideals equal: " << (equal ? "yes" : "no") << "\n";
    }
  } else if (cmd == "lattice") {
    Lattice l = latticeL(inst);
    IntMat raw = latticeLBasisRaw(inst);
    if (jsonMode) {
      rep.j["basis"] = matrixToJson(l.basis());
      rep.j["algorithmBasis"] = matrixToJson(raw);
    } else {
      rep.text << "lattice L (HNF basis columns, rank " << l.rank() << "):\n"
               << matToString(l.basis());
      rep.text << "algorithm basis (phi * M):\n" << matToString(raw);
    }
    if (shortcut) {
      ColonShortcut cs = latticeViaColon(inst);
      bool qhom = isQHomogeneous(inst);
      if (jsonMode) {
        rep.j["colonLattice"] = matrixToJson(cs.lattice.basis());
        rep.j["conditionHolds"] = cs.conditionHolds;
        rep.j["qHomogeneous"] = qhom;
      } else {
        rep.text << "colon-shortcut lattice (HNF basis columns):\n"
                 << matToString(cs.lattice.basis());
        rep.text << "colon condition (QL_beta = QL_beta:(q-1)): "
                 << (cs.conditionHolds ? "holds" : "fails") << "\n";
        rep.text << "Q homogeneous: " << (qhom ? "yes" : "no") << "\n";
      }
      bool diagonal = inst.s() == inst.r();
      for (int i = 0; diagonal && i < inst.r(); ++i)
        for (int j = 0; j < inst.r(); ++j)
          if (i != j && !inst.qmat()(i, j).isZero()) diagonal = false;
      if (diagonal) {
        Lattice deg = latticeDegenerate(inst);
        if (jsonMode) rep.j["degenerateLattice"] = matrixToJson(deg.basis());
        else
          rep.text << "degenerate-torus lattice (diagonal Q):\n"
                   << matToString(deg.basis());
      }
    }
  } else if (cmd == "length") {
    if (method == "count") {
      long long n = lengthCount(inst);
      if (jsonMode) { rep.j["N"] = n; rep.j["method"] = "count"; }
      else rep.text << "N = " << n << "  (method: count)\n";
    } else if (method == "points") {
      long long n = static_cast<long long>(enumeratePoints(inst).size());
      if (jsonMode) { rep.j["N"] = n; rep.j["method"] = "points"; }
      else rep.text << "N = " << n << "  (method: points)\n";
    } else {
      Int n = lengthSnf(inst);
      if (jsonMode) { rep.j["N"] = n.toInt64(); rep.j["method"] = "snf"; }
      else rep.text << "N = " << n << "  (method: snf)\n";
    }
  } else if (cmd == "params") {
    IntVec alpha = requireAlpha(file, inst);
    CodeSummary code = codeParams(inst, alpha, distance);
    if (jsonMode) {
      rep.j["alpha"] = vectorToJson(alpha);
      rep.j["N"] = code.length;
      rep.j["k"] = code.dimension;
      if (code.distance) rep.j["d"] = *code.distance;
      rep.j["generator"] = gfMatrixToJson(inst.field(), code.generator);
    } else {
      rep.text << "alpha = " << vectorToJson(alpha).dump() << "\n";
      rep.text << "N = " << code.length << "\n";
      rep.text << "k = " << code.dimension << "\n";
      if (code.distance) rep.text << "d = " << *code.distance << "\n";
      rep.text << "generator matrix (" << code.generator.rows() << " x "
               << code.generator.cols() << ", rows = points):\n"
               << gfMatrixToString(inst.field(), code.generator);
    }
  } else if (cmd == "hf") {
    IntVec alpha = requireAlpha(file, inst);
    VanishingIdealResult ideal = idealViaLattice(inst);
    long long value = hilbertFunction(inst, ideal.generators, alpha);
    if (jsonMode) {
      rep.j["alpha"] = vectorToJson(alpha);
      rep.j["value"] = value;
    } else {
      rep.text << "alpha = " << vectorToJson(alpha).dump() << "\n";
      rep.text << "hilbert function = " << value << "\n";
    }
  } else if (cmd == "check-ci") {
    CiReport ci = completeIntersection(inst);
    if (jsonMode) {
      rep.j["basis"] = matrixToJson(ci.basis);
      rep.j["mixed"] = ci.mixed;
      rep.j["dominating"] = ci.dominating;
      rep.j["completeIntersection"] = ci.completeIntersection;
      if (ci.anomaly) rep.j["anomaly"] = true;
    } else {
      rep.text << "basis (phi * M):\n" << matToString(ci.basis);
      rep.text << "mixed: " << (ci.mixed ? "yes" : "no") << "\n";
      rep.text << "dominating: " << (ci.dominating ? "yes" : "no") << "\n";
      rep.text << "complete intersection: "
               << (ci.completeIntersection ? "yes" : "no") << "\n";
      if (ci.anomaly)
        rep.text << "warning: dominating basis with a non-mixed column, "
                    "which contradicts L cap N^r = {0}\n";
    }
  } else if (cmd == "points") {
    std::vector<TorusPoint> pts = enumeratePoints(inst);
    if (jsonMode) {
      rep.j["N"] = static_cast<long long>(pts.size());
      json arr = json::array();
      for (const TorusPoint& p : pts) {
        json coords = json::array();
        for (Field::Elem c : p.coords)
          coords.push_back(renderElem(inst.field(), c));
        arr.push_back(json{{"key", p.key}, {"coords", std::move(coords)}});
      }
      rep.j["points"] = std::move(arr);
    } else {
      rep.text << "N = " << pts.size() << "\n";
      for (const TorusPoint& p : pts) {
        rep.text << "  [";
        for (std::size_t i = 0; i < p.key.size(); ++i) {
          if (i) rep.text << " ";
          rep.text << p.key[i];
        }
        rep.text << "] :";
        for (Field::Elem c : p.coords)
          rep.text << " " << renderElem(inst.field(), c);
        rep.text << "\n";
      }
    }
  }
  out << rep.finish();
  return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"parameterized toric code calculator"};
  app.require_subcommand(1);

  struct Common {
    std::string input;
    bool jsonMode = false;
  };
  std::string idealMethod = "both";
  std::string lengthMethod = "snf";
  bool shortcut = false;
  bool distance = false;

  std::map<std::string, Common> common;
  auto addCommon = [&](CLI::App* sub) {
    auto& c = common[sub->get_name()];
    sub->add_option("--input", c.input, "instance JSON file")->required();
    sub->add_flag("--json", c.jsonMode, "emit JSON instead of text");
  };

  CLI::App* ideal = app.add_subcommand("ideal", "vanishing ideal generators");
  addCommon(ideal);
  ideal->add_option("--method", idealMethod, "elim | lattice | both")
      ->check(CLI::IsMember({"elim", "lattice", "both"}));

  CLI::App* lattice = app.add_subcommand("lattice", "defining lattice of I(Y_Q)");
  addCommon(lattice);
  lattice->add_flag("--shortcut", shortcut,
                    "also report the colon-shortcut lattice and verdicts");

  CLI::App* length = app.add_subcommand("length", "code length N = |Y_Q|");
  addCommon(length);
  length->add_option("--method", lengthMethod, "count | snf | points")
      ->check(CLI::IsMember({"count", "snf", "points"}));

  CLI::App* params = app.add_subcommand("params", "code parameters (N, k, d)");
  addCommon(params);
  params->add_flag("--distance", distance, "exhaustive minimum distance");

  CLI::App* hf = app.add_subcommand("hf", "multigraded Hilbert function value");
  addCommon(hf);

  CLI::App* checkci =
      app.add_subcommand("check-ci", "complete-intersection test");
  addCommon(checkci);

  CLI::App* points = app.add_subcommand("points", "enumerate Y_Q");
  addCommon(points);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  const Common& c = common[cmd];
  std::string method = cmd == "ideal" ? idealMethod : lengthMethod;

  try {
    InstanceFile file = loadInstanceFile(c.input);
    return dispatch(cmd, file, c.jsonMode, method, shortcut, distance, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Input: return 2;
      case ErrorKind::Unsupported: return 3;
      case ErrorKind::Guard: return 4;
    }
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace toricode
