// braidcover: invariants of lifted braid axes in double covers branched
// over annular braid closures.
#include <CLI11.hpp>
#include <braidcover/alexander.hpp>
#include <braidcover/diagram.hpp>
#include <braidcover/floer.hpp>
#include <braidcover/foxcalc.hpp>
#include <braidcover/freegroup.hpp>
#include <braidcover/restree.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

using namespace braidcover;
using nlohmann::json;

namespace {

// branched-double-cover pipelines need the closure to meet the spanning
// disc in an odd number of points
void requireOddStrands(const BraidWord& w) {
  if (w.strands % 2 == 0)
    throw PreconditionError("strand count must be odd (the closure must meet "
                            "the spanning disc in an odd number of points)");
}

json polyJson(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.c) out.push_back({{"exp", e}, {"coeff", c.str()}});
  return out;
}

json groupJson(const AbelianGroup& g) {
  json inv = json::array();
  for (const auto& d : g.invariantFactors) inv.push_back(d.str());
  json images = json::array();
  for (const auto& im : g.generatorImages) images.push_back(g.render(im));
  return {{"invariantFactors", inv},
          {"freeRank", g.freeRank},
          {"order", g.order().str()},
          {"generatorImages", images},
          {"group", g.renderGroup()}};
}

AbelianGroup h1Of(const BraidWord& w) {
  IntMatrix a = abelianize(monodromy(w));
  IntMatrix rel(a.rows, a.cols);
  for (int i = 0; i < a.rows; i++)
    for (int j = 0; j < a.cols; j++) rel.at(i, j) = a.at(i, j) - (i == j ? 1 : 0);
  return cokernel(rel);
}

json torsionJson(const TorsionResult& tr) {
  json coeffs = json::array();
  for (const auto& h : tr.ring.grp.elements())
    coeffs.push_back({{"s", tr.ring.grp.render(h)},
                      {"poly", polyJson(tr.ring.coefficientPoly(tr.torsion, h))},
                      {"polyStr", tr.ring.coefficientPoly(tr.torsion, h).str()}});
  return {{"alexander", polyJson(tr.alexander)},
          {"alexanderStr", tr.alexander.str()},
          {"h1", groupJson(tr.ring.grp)},
          {"coefficients", coeffs}};
}

void printTorsion(const TorsionResult& tr) {
  std::cout << "Delta = " << tr.alexander.str() << "\n";
  std::cout << "H1 = " << tr.ring.grp.renderGroup() << "\n";
  for (const auto& h : tr.ring.grp.elements())
    std::cout << "p[" << tr.ring.grp.render(h)
              << "] = " << tr.ring.coefficientPoly(tr.torsion, h).str() << "\n";
}

json hfkJson(const HFKTable& t) {
  json cols = json::array();
  for (const auto& col : t.columns) {
    json ranks = json::array();
    for (const auto& [j, r] : col.rankByJ)
      ranks.push_back({{"j", j}, {"rank", r.str()}, {"grading", ((j % 2) + 2) % 2}});
    json s = json::array();
    for (const auto& x : col.s) s.push_back(x.str());
    cols.push_back({{"s", s}, {"ranks", ranks}, {"tau", 0}});
  }
  return {{"genus", t.genus}, {"columns", cols}};
}

void printHfk(const GroupRing& ring, const HFKTable& t) {
  std::cout << "genus = " << t.genus << "\n";
  for (const auto& col : t.columns) {
    std::cout << "s = " << ring.grp.render(col.s) << "  (tau = 0)\n";
    for (auto it = col.rankByJ.rbegin(); it != col.rankByJ.rend(); ++it)
      std::cout << "  j = " << it->first << ": rank " << it->second.str()
                << "  [Z/2 grading " << ((it->first % 2) + 2) % 2 << "]\n";
  }
}

json censusJson(const ResolutionNode& tree) {
  json out = json::array();
  for (const auto& e : leafCensus(tree))
    out.push_back({{"det", e.inv.det.str()},
                   {"alex", polyJson(e.inv.alex)},
                   {"alexStr", e.inv.alex.str()},
                   {"signature", e.inv.signature},
                   {"count", e.count}});
  return out;
}

json staircaseFormJson(const StaircaseForm& f) {
  json words = json::array();
  for (const auto& wd : f.words)
    words.push_back({{"start", wd.start}, {"halfLength", wd.halfLength},
                     {"exponents", wd.exps}});
  json T = json::array();
  for (const auto& t : f.T) T.push_back(t.str());
  return {{"strands", f.strands}, {"g", f.g},     {"m", f.m},
          {"s", f.s},             {"words", words}, {"T", T},
          {"sumT", f.sumT.str()}};
}

json eftekharyJson(const EftekharyReport& rep) {
  return {{"staircase", rep.staircase},
          {"rewritten", rep.rewritten},
          {"rewrittenWord", rep.rewrittenWord},
          {"hfpForm", staircaseFormJson(rep.hfpForm)},
          {"cohomologyForm", staircaseFormJson(rep.cohomologyForm)},
          {"hfk",
           {{"topRank", rep.hfk.hfkTop.str()},
            {"g1RankAtM", rep.hfk.hfkG1AtM.str()},
            {"g1RankAtM1", rep.hfk.hfkG1AtM1.str()},
            {"hfpRankAtM", rep.hfk.hfpAtM.str()},
            {"hfpRankAtM1", rep.hfk.hfpAtM1.str()},
            {"hfpTotal", rep.hfk.hfpTotal.str()},
            {"gradingM", rep.hfk.gradingM}}},
          {"cohomology", {{"h0", rep.cohomology.h0.str()},
                          {"h1", rep.cohomology.h1.str()}}},
          {"ranksAgree", rep.ranksAgree},
          {"message", rep.message}};
}

void printEftekhary(const EftekharyReport& rep) {
  std::cout << rep.message << "\n";
  const StaircaseHFK& h = rep.hfk;
  std::cout << "HFK(B~, g)   = Z  [grading " << h.gradingM << "]\n";
  std::cout << "HFK(B~, g-1) = Z^" << h.hfkG1AtM.str() << " [grading "
            << h.gradingM << "] + Z^" << h.hfkG1AtM1.str() << " [grading "
            << h.gradingM - 1 << "]\n";
  std::cout << "HF+(Y, s_{g-2}) = Z^" << h.hfpAtM.str() << " [grading "
            << h.gradingM << "] + Z^" << h.hfpAtM1.str() << " [grading "
            << h.gradingM - 1 << "]  (total " << h.hfpTotal.str() << ")\n";
  std::cout << "H*(F\\C): H^0 = Z^" << rep.cohomology.h0.str() << ", H^1 = Z^"
            << rep.cohomology.h1.str() << "  (total "
            << Int(rep.cohomology.h0 + rep.cohomology.h1).str() << ")\n";
}

json qprimeNodeJson(const QPrimeNode& n) {
  json out = {{"det", n.det.str()},
              {"leaf", n.leaf},
              {"branchedCrossing", n.branchedCrossing}};
  if (!n.children.empty()) {
    json ch = json::array();
    for (const auto& c : n.children) ch.push_back(qprimeNodeJson(c));
    out["children"] = ch;
  }
  return out;
}

struct Options {
  std::string word;
  bool asJson = false;
  bool asDot = false;
  int maxCrossings = 24;
  bool noLeafInvariants = false;
};

void emit(bool asJson, const json& j, const std::function<void()>& human) {
  if (asJson)
    std::cout << j.dump(2) << "\n";
  else
    human();
}

int run(const std::string& cmd, const Options& opt) {
  BraidWord w = parseBraid(opt.word);
  if (cmd == "alex") {
    requireOddStrands(w);
    LaurentPoly d = alexanderFromMonodromy(abelianize(monodromy(w)));
    emit(opt.asJson,
         json{{"word", w.str()}, {"delta", polyJson(d)}, {"deltaStr", d.str()}},
         [&] { std::cout << "Delta = " << d.str() << "\n"; });
  } else if (cmd == "h1") {
    requireOddStrands(w);
    AbelianGroup g = h1Of(w);
    emit(opt.asJson, json{{"word", w.str()}, {"h1", groupJson(g)}}, [&] {
      std::cout << "H1 = " << g.renderGroup() << "\n";
      for (size_t i = 0; i < g.generatorImages.size(); i++)
        std::cout << "gamma" << i + 1 << " -> " << g.render(g.generatorImages[i])
                  << "\n";
    });
  } else if (cmd == "torsion") {
    requireOddStrands(w);
    TorsionResult tr = refinedTorsion(w);
    emit(opt.asJson, json{{"word", w.str()}, {"torsion", torsionJson(tr)}},
         [&] { printTorsion(tr); });
  } else if (cmd == "hfk") {
    requireOddStrands(w);
    TorsionResult tr = refinedTorsion(w);
    HFKTable t = hfkFromTorsion(tr.ring, tr.torsion, (w.strands - 1) / 2);
    emit(opt.asJson, json{{"word", w.str()}, {"hfk", hfkJson(t)}},
         [&] { printHfk(tr.ring, t); });
  } else if (cmd == "hfplus") {
    requireOddStrands(w);
    LaurentPoly d = alexanderFromMonodromy(abelianize(monodromy(w)));
    TorsionCoeffs tc = torsionCoeffs(d);
    json t = json::array(), b = json::array();
    for (const auto& x : tc.t) t.push_back(x.str());
    for (const auto& x : tc.b) b.push_back(x.str());
    emit(opt.asJson,
         json{{"word", w.str()}, {"delta", polyJson(d)}, {"genus", tc.genus},
              {"t", t}, {"b", b}},
         [&] {
           std::cout << "Delta = " << d.str() << "\n";
           for (size_t s = 0; s < tc.t.size(); s++)
             std::cout << "t_" << s << " = " << tc.t[s].str() << "\n";
           for (size_t s = 0; s < tc.b.size(); s++)
             std::cout << "b_" << s + 1 << " = " << tc.b[s].str()
                       << "  (HF+ rank of the page-framed surgery)\n";
         });
  } else if (cmd == "tree") {
    requireOddStrands(w);
    TreeOptions topt;
    topt.maxCrossings = opt.maxCrossings;
    topt.leafInvariants = !opt.noLeafInvariants;
    ResolutionNode tree = wehrliTree(closureDiagram(w), topt);
    if (opt.asDot) {
      std::cout << treeToDot(tree);
      return 0;
    }
    json j{{"word", w.str()}, {"leafCount", leafCount(tree)},
           {"tree", json::parse(treeToJson(tree))}};
    if (topt.leafInvariants) j["census"] = censusJson(tree);
    emit(opt.asJson, j, [&] {
      std::cout << "leaves: " << leafCount(tree) << "\n";
      if (topt.leafInvariants)
        for (const auto& e : leafCensus(tree))
          std::cout << "x" << e.count << "  det = " << e.inv.det.str()
                    << "  sigma = " << e.inv.signature
                    << "  Delta = " << e.inv.alex.str() << "\n";
    });
  } else if (cmd == "qprime") {
    requireOddStrands(w);
    QPrimeResult r = isQuasiAlternatingAnnular(closureDiagram(w), opt.maxCrossings);
    json j{{"word", w.str()}, {"member", r.member}};
    if (r.member) j["certificate"] = qprimeNodeJson(r.certificate);
    emit(opt.asJson, j, [&] {
      std::cout << (r.member ? "member of Q' (certificate found)"
                             : "no Q' certificate found")
                << "\n";
      if (r.member)
        std::cout << "closure determinant = " << r.certificate.det.str() << "\n";
    });
  } else if (cmd == "staircase") {
    EftekharyReport rep = eftekharyCheck(w);
    emit(opt.asJson, json{{"word", w.str()}, {"report", eftekharyJson(rep)}},
         [&] { printEftekhary(rep); });
  } else if (cmd == "report") {
    requireOddStrands(w);
    json j{{"word", w.str()}, {"strands", w.strands}};
    json warnings = json::array();
    FreeEndomorphism f = monodromy(w);
    json images = json::array();
    for (const auto& im : f.images) images.push_back(im.str("gamma"));
    j["monodromy"] = images;
    IntMatrix a = abelianize(f);
    json am = json::array();
    for (int i = 0; i < a.rows; i++) {
      json row = json::array();
      for (int k = 0; k < a.cols; k++) row.push_back(a.at(i, k).str());
      am.push_back(row);
    }
    j["abelianized"] = am;
    j["h1"] = groupJson(h1Of(w));
    try {
      TorsionResult tr = refinedTorsion(w);
      j["torsion"] = torsionJson(tr);
      j["hfk"] = hfkJson(hfkFromTorsion(tr.ring, tr.torsion, (w.strands - 1) / 2));
      TorsionCoeffs tc = torsionCoeffs(tr.alexander);
      json t = json::array(), b = json::array();
      for (const auto& x : tc.t) t.push_back(x.str());
      for (const auto& x : tc.b) b.push_back(x.str());
      j["torsionCoeffs"] = {{"genus", tc.genus}, {"t", t}, {"b", b}};
    } catch (const PreconditionError& e) {
      warnings.push_back(std::string("torsion stage skipped: ") + e.what());
    }
    try {
      ResolutionNode tree = wehrliTree(closureDiagram(w));
      j["tree"] = {{"leafCount", leafCount(tree)}, {"census", censusJson(tree)}};
    } catch (const std::exception& e) {
      warnings.push_back(std::string("resolution tree skipped: ") + e.what());
    }
    try {
      j["staircase"] = eftekharyJson(eftekharyCheck(w));
    } catch (const PreconditionError& e) {
      warnings.push_back(std::string("staircase stage skipped: ") + e.what());
    }
    j["warnings"] = warnings;
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of lifted braid axes in branched double covers"};
  app.require_subcommand(1);
  Options opt;
  std::string cmd;
  for (const char* name :
       {"alex", "h1", "torsion", "hfk", "hfplus", "tree", "qprime", "staircase",
        "report"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("word", opt.word, "annular braid word, e.g. \"b=3: s1 s2^-1\"")
        ->required();
    sub->add_flag("--json", opt.asJson, "machine-readable JSON output");
    if (std::string(name) == "tree")
      sub->add_flag("--dot", opt.asDot, "Graphviz DOT output");
    if (std::string(name) == "tree" || std::string(name) == "qprime")
      sub->add_option("--max-crossings", opt.maxCrossings,
                      "crossing cap for resolution trees");
    if (std::string(name) == "tree")
      sub->add_flag("--no-leaf-invariants", opt.noLeafInvariants,
                    "skip leaf invariant computation");
    sub->callback([name, &cmd] { cmd = name; });
  }
  try {
    app.parse(argc, argv);
    return run(cmd, opt);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  }
}
