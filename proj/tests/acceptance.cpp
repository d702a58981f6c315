// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include "helpers.hpp"
#include <braidcover/alexander.hpp>
#include <braidcover/diagram.hpp>
#include <braidcover/floer.hpp>
#include <braidcover/foxcalc.hpp>
#include <braidcover/freegroup.hpp>
#include <braidcover/matrix.hpp>
#include <braidcover/restree.hpp>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace braidcover;

namespace {

int failures = 0;
std::ostringstream detail;

void expect(bool ok, const std::string& what) {
  if (!ok) detail << "    FAILED: " << what << "\n";
  if (!ok) failures++;
}

void criterion(int n, const std::string& name, const std::function<void()>& body) {
  int before = failures;
  detail.str("");
  try {
    body();
  } catch (const std::exception& e) {
    failures++;
    detail << "    exception: " << e.what() << "\n";
  }
  std::cout << (failures == before ? "PASS" : "FAIL") << "  AC" << n << ": " << name
            << "\n" << detail.str();
}

std::map<std::string, int> torsionCensus(const TorsionResult& tr) {
  std::map<std::string, int> m;
  for (const auto& h : tr.ring.grp.elements())
    m[tr.ring.coefficientPoly(tr.torsion, h).str()]++;
  return m;
}

} // namespace

int main() {
  criterion(1, "three-strand worked-example pipeline", [] {
    BraidWord w = parseBraid("b=3: s1 s2^-1 s1 s2^-1");
    FreeEndomorphism f = monodromy(w);
    // reference images: g1 -> g1 g2 g1^2 g2 g1 g2 g1, g2 -> g1 g2 g1^2 g2
    expect(f.images[0].letters == std::vector<int>{1, 2, 1, 1, 2, 1, 2, 1},
           "monodromy image of gamma_1");
    expect(f.images[1].letters == std::vector<int>{1, 2, 1, 1, 2},
           "monodromy image of gamma_2");
    TorsionResult tr = refinedTorsion(w);
    expect(tr.alexander == poly({{-1, -1}, {0, 7}, {1, -1}}), "Delta = -T^-1+7-T");
    expect(tr.ring.grp.order() == 5, "|H1| = 5");
    // torsion unit-equivalent to -T -Te +(1-3T+T^2)e^2 -Te^3 -Te^4:
    // normalized coefficients {1 x4, (-T^-1+3-T) x1}
    std::map<std::string, int> expected{{poly({{0, 1}}).str(), 4},
                                        {poly({{-1, -1}, {0, 3}, {1, -1}}).str(), 1}};
    expect(torsionCensus(tr) == expected, "refined torsion coefficients");
    HFKTable t = hfkFromTorsion(tr.ring, tr.torsion, 1);
    std::map<int, Int> fourOne{{-1, 1}, {0, 3}, {1, 1}}, trivial{{0, 1}};
    int special = 0, plain = 0;
    for (const auto& col : t.columns) {
      special += (col.rankByJ == fourOne);
      plain += (col.rankByJ == trivial);
    }
    expect(special == 1 && plain == 4, "HFK table (1,3,1) + four trivial");
  });

  criterion(2, "two-parameter twist-region grid", [] {
    for (int m = -5; m <= -1; m++)
      for (int n = 1; n <= 5; n++) {
        std::ostringstream os;
        os << "b=3: s1^" << n << " s2^" << m;
        TorsionResult tr = refinedTorsion(parseBraid(os.str()));
        expect(tr.alexander == poly({{-1, -1}, {0, 2 - m * n}, {1, -1}}),
               os.str() + " Delta");
        // closed form: every Spin^c trivial except one 4_1 coefficient
        std::map<std::string, int> expected{
            {poly({{-1, -1}, {0, 3}, {1, -1}}).str(), 1}};
        if (-m * n > 1) expected[poly({{0, 1}}).str()] = -m * n - 1;
        expect(torsionCensus(tr) == expected, os.str() + " torsion closed form");
        HFKTable t = hfkFromTorsion(tr.ring, tr.torsion, 1);
        std::map<int, Int> fourOne{{-1, 1}, {0, 3}, {1, 1}}, trivial{{0, 1}};
        int special = 0, plain = 0;
        for (const auto& col : t.columns) {
          special += (col.rankByJ == fourOne);
          plain += (col.rankByJ == trivial);
        }
        expect(special == 1 && plain == (int)(-m * n - 1),
               os.str() + " HFK column shape");
      }
  });

  criterion(3, "eight-leaf worked-example pipeline", [] {
    BraidWord w = parseBraid("b=5: s1^-2 s3^-1 s2^2 s4 s3^-1");
    TorsionResult tr = refinedTorsion(w);
    expect(tr.alexander == poly({{-2, 1}, {-1, -14}, {0, 34}, {1, -14}, {2, 1}}),
           "Delta = T^2-14T+34-14T^-1+T^-2");
    expect(tr.ring.grp.invariantFactors == std::vector<Int>{2, 2, 2},
           "H1 = (Z/2)^3");
    expect(tr.ring.grp.generatorImages[3] == tr.ring.grp.generatorImages[2],
           "e4 = e3");
    std::map<std::string, int> expected{
        {poly({{-2, 1}, {-1, -7}, {0, 13}, {1, -7}, {2, 1}}).str(), 1},
        {poly({{-1, -2}, {0, 5}, {1, -2}}).str(), 2},
        {poly({{-1, -1}, {0, 3}, {1, -1}}).str(), 3},
        {poly({{0, 1}}).str(), 2}};
    expect(torsionCensus(tr) == expected, "four-line torsion display (multiset)");
    ResolutionNode tree = wehrliTree(closureDiagram(w));
    expect(leafCount(tree) == 8, "8 leaves");
    std::map<std::string, int> census;
    for (const auto& e : leafCensus(tree)) census[e.inv.alex.str()] += e.count;
    expect(census == expected, "leaf Alexander multiset");
  });

  criterion(4, "positive square word", [] {
    BraidWord w = parseBraid("b=5: s1^2 s2^2 s3^2 s4^2");
    LaurentPoly delta = alexanderFromMonodromy(abelianize(monodromy(w)));
    expect(delta == poly({{-2, 1}, {-1, 8}, {0, -2}, {1, 8}, {2, 1}}),
           "Delta = T^2+8T-2+8T^-1+T^-2");
    ResolutionNode tree = wehrliTree(closureDiagram(w));
    expect(leafCount(tree) == 16, "16 leaves");
    std::map<Int, int> dets;
    for (const auto& e : leafCensus(tree)) dets[e.inv.det] += e.count;
    std::map<Int, int> expected{{1, 8}, {3, 5}, {7, 2}, {5, 1}};
    expect(dets == expected, "cover-determinant multiset {1x8,3x5,7x2,5x1}");
    StaircaseForm f = staircaseParse(w);
    StaircaseHFK h = staircaseHFK(f);
    expect(h.hfkG1AtM == 9 && h.hfkG1AtM1 == 1 && h.gradingM == 0,
           "j=1 row Z_(-1) + Z^9_(0)");
    ComplementCohomology ch = complementCohomology(f);
    expect(h.hfpTotal == 10 && ch.h0 + ch.h1 == 10, "HF+/H* totals 10 = 10");
  });

  criterion(5, "staircase counterexample", [] {
    EftekharyReport rep = eftekharyCheck(parseBraid("b=7: s1 s2 s3 s4 s5 s4 s6"));
    expect(rep.rewritten, "Markov rewrite applied");
    expect(rep.rewrittenWord == parseBraid("b=7: s1 s2 s3 s4 s5 s6^2").str(),
           "rewritten to s1 s2 s3 s4 s5 s6^2");
    expect(rep.hfk.hfpTotal == 2, "HF+ total 2");
    expect(rep.cohomology.h0 + rep.cohomology.h1 == 3, "H*(F\\C) = Z^3");
    expect(!rep.ranksAgree && rep.message.find("MISMATCH") != std::string::npos,
           "mismatch report emitted");
  });

  criterion(6, "Property suites (>= 200 cases each)", [] {
    std::mt19937 rng(20260827);

    // Fox fundamental identity: sum_x d(w)/dx * (x - 1) = w - 1
    for (int t = 0; t < 200; t++) {
      int rank = 2 + t % 3, len = 1 + t % 10;
      std::vector<int> w;
      for (int i = 0; i < len; i++) {
        int g = 1 + (int)(rng() % rank);
        w.push_back(rng() % 2 ? g : -g);
      }
      w = reduced(w).letters;
      WordSum total;
      for (int x = 1; x <= rank; x++) {
        WordSum xm1{{{x}, 1}, {{}, -1}};
        total = wordSumAdd(total, wordSumMul(foxDerivative(w, x), xm1));
      }
      WordSum expected{{w, 1}, {{}, -1}};
      if (w.empty()) expected.clear();
      for (auto it = expected.begin(); it != expected.end();)
        it = (it->second == 0) ? expected.erase(it) : std::next(it);
      expect(total == expected, "Fox identity case " + std::to_string(t));
      if (total != expected) return;
    }

    // SNF vs minor-gcd oracle (independent characterization of the d_i)
    for (int t = 0; t < 200; t++) {
      int n = 1 + t % 4, m = 1 + (t / 4) % 4;
      IntMatrix a(n, m);
      for (int i = 0; i < n; i++)
        for (int j = 0; j < m; j++) a.at(i, j) = (int)(rng() % 21) - 10;
      SmithResult s = smithNormalForm(a);
      // divisibility chain and the product rule d_1..d_k = gcd of k-minors
      Int prod = 1;
      bool ok = true;
      for (int k = 1; k <= std::min(n, m); k++) {
        Int dk = s.d.at(k - 1, k - 1);
        if (k > 1 && dk != 0 && s.d.at(k - 2, k - 2) != 0 &&
            dk % s.d.at(k - 2, k - 2) != 0)
          ok = false;
        prod *= dk;
        // gcd of all k x k minors by enumeration
        std::vector<std::vector<int>> rsel, csel;
        std::function<void(int, int, std::vector<int>&, int, std::vector<std::vector<int>>&)>
            comb = [&](int start, int need, std::vector<int>& cur, int limit,
                       std::vector<std::vector<int>>& out) {
              if (need == 0) { out.push_back(cur); return; }
              for (int i = start; i <= limit - need; i++) {
                cur.push_back(i);
                comb(i + 1, need - 1, cur, limit, out);
                cur.pop_back();
              }
            };
        std::vector<int> cur;
        comb(0, k, cur, n, rsel);
        comb(0, k, cur, m, csel);
        Int g = 0;
        for (const auto& rs : rsel)
          for (const auto& cs : csel) {
            IntMatrix sub(k, k);
            for (int i = 0; i < k; i++)
              for (int j = 0; j < k; j++) sub.at(i, j) = a.at(rs[i], cs[j]);
            g = gcdInt(g, determinant(sub));
          }
        if (absInt(prod) != absInt(g)) ok = false;
      }
      expect(ok, "SNF minor-gcd case " + std::to_string(t));
      if (!ok) return;
    }

    // Delta symmetry + Delta(1) = |H1| for fully alternating words
    int done = 0;
    for (int t = 0; t < 2000 && done < 200; t++) {
      int b = 3 + 2 * (t % 3);
      BraidWord w = randomFullyAlternating(rng, b, 1 + t % 5);
      if ((int)w.letters.size() > 10) continue;
      IntMatrix a = abelianize(monodromy(w));
      IntMatrix rel(a.rows, a.cols);
      for (int i = 0; i < a.rows; i++)
        for (int j = 0; j < a.cols; j++) rel.at(i, j) = a.at(i, j) - (i == j ? 1 : 0);
      Int h1 = absInt(determinant(rel));
      if (h1 == 0) continue;
      LaurentPoly delta = alexanderFromMonodromy(a);
      expect(delta.isSymmetric() && delta.evalAtOne() == h1,
             "Delta symmetry/|H1| " + w.str());
      done++;
    }
    expect(done >= 200, "enough Delta cases");

    // torsion: e->1 specialization and per-coefficient sign pattern
    done = 0;
    for (int t = 0; t < 2000 && done < 200; t++) {
      int b = 3 + 2 * (t % 2);
      BraidWord w = randomFullyAlternating(rng, b, 1 + t % 3);
      if ((int)w.letters.size() > 8) continue;
      TorsionResult tr;
      try {
        tr = refinedTorsion(w);
      } catch (const PreconditionError&) {
        continue;
      }
      bool ok = (tr.ring.evalEOne(tr.torsion) == tr.alexander);
      for (const auto& h : tr.ring.support(tr.torsion)) {
        LaurentPoly p = tr.ring.coefficientPoly(tr.torsion, h);
        ok = ok && p.isSymmetric() && hasAlternatingSignPattern(p);
      }
      expect(ok, "torsion properties " + w.str());
      done++;
    }
    expect(done >= 200, "enough torsion cases");

    // leaf count = determinant, and leaf cover signature = 0
    done = 0;
    for (int t = 0; t < 3000 && done < 200; t++) {
      int b = 3 + 2 * (t % 3);
      BraidWord w = randomFullyAlternating(rng, b, 1 + t % 4);
      if ((int)w.letters.size() > 12) continue;
      LinkDiagram d = closureDiagram(w);
      Int det = diagramDeterminant(d);
      if (det == 0) continue;
      ResolutionNode tree = wehrliTree(d);
      bool ok = (Int(leafCount(tree)) == det);
      for (const auto& e : leafCensus(tree)) ok = ok && e.inv.signature == 0;
      expect(ok, "leaf count/signature " + w.str());
      done++;
    }
    expect(done >= 200, "enough leaf cases");

    // random staircase forms: chi(C) cross-check and HF+ = H* totals
    done = 0;
    while (done < 200) {
      int g = 1 + (int)(rng() % 4);
      std::ostringstream os;
      os << "b=" << (2 * g + 1) << ":";
      int pos = 1, words = 0;
      while (pos + 1 <= 2 * g) {
        if (rng() % 3 == 0) { pos++; continue; }
        int maxK = std::min(3, (2 * g - pos + 1) / 2);
        int k = 1 + (int)(rng() % maxK);
        for (int l = 0; l < 2 * k; l++) os << " s" << (pos + l) << "^" << (1 + rng() % 4);
        pos += 2 * k + 1;
        words++;
      }
      if (words == 0) continue;
      StaircaseForm f = staircaseParse(parseBraid(os.str()));
      ComplementCohomology ch = complementCohomology(f); // throws on chi failure
      StaircaseHFK h = staircaseHFK(f);
      expect(h.hfpTotal == ch.h0 + ch.h1, "staircase totals " + os.str());
      done++;
    }
  });

  if (failures) std::cout << failures << " acceptance check(s) failed\n";
  return failures ? 1 : 0;
}
