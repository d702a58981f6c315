#include "braidcover/foxcalc.hpp"
#include "braidcover/alexander.hpp"
#include <unordered_map>

namespace braidcover {

Presentation buildPresentation(const FreeEndomorphism& f) {
  Presentation p;
  p.rank = f.rank;
  int t = f.rank + 1;
  for (int i = 1; i <= f.rank; i++) {
    std::vector<int> w;
    w.push_back(-i);
    w.push_back(t);
    for (int l : f.images[i - 1].letters) w.push_back(l);
    w.push_back(-t);
    p.relations.push_back(reduced(std::move(w)).letters);
  }
  return p;
}

WordSum wordSumOfWord(const std::vector<int>& w) {
  return {{reduced(w).letters, Int(1)}};
}

WordSum wordSumAdd(const WordSum& a, const WordSum& b) {
  WordSum r = a;
  for (const auto& [w, k] : b) {
    Int& slot = r[w];
    slot += k;
    if (slot == 0) r.erase(w);
  }
  return r;
}

WordSum wordSumMul(const WordSum& a, const WordSum& b) {
  WordSum r;
  for (const auto& [wa, ka] : a)
    for (const auto& [wb, kb] : b) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      std::vector<int> red = reduced(std::move(w)).letters;
      Int& slot = r[red];
      slot += ka * kb;
      if (slot == 0) r.erase(red);
    }
  return r;
}

WordSum foxDerivative(const std::vector<int>& w, int x) {
  WordSum out;
  std::vector<int> prefix;
  for (int l : w) {
    if (l == x) {
      std::vector<int> term = reduced(prefix).letters;
      Int& slot = out[term];
      slot += 1;
      if (slot == 0) out.erase(term);
    } else if (l == -x) {
      std::vector<int> p = prefix;
      p.push_back(-x);
      std::vector<int> term = reduced(std::move(p)).letters;
      Int& slot = out[term];
      slot -= 1;
      if (slot == 0) out.erase(term);
    }
    prefix.push_back(l);
  }
  return out;
}

GroupRingElem pushWord(const GroupRing& R, int rank, const std::vector<int>& w) {
  std::vector<Int> h = R.grp.zero();
  int t = 0;
  for (int l : w) {
    int k = l > 0 ? l : -l;
    if (k == rank + 1) {
      t += l > 0 ? 1 : -1;
    } else {
      const std::vector<Int>& img = R.grp.generatorImages[k - 1];
      h = R.grp.add(h, l > 0 ? img : R.grp.neg(img));
    }
  }
  return R.monomial(std::move(h), t, Int(1));
}

GroupRingElem pushForward(const GroupRing& R, int rank, const WordSum& s) {
  GroupRingElem r;
  for (const auto& [w, k] : s) {
    GroupRingElem m = pushWord(R, rank, w);
    for (auto& [key, v] : m.c) v *= k;
    r = R.add(r, m);
  }
  return r;
}

std::vector<std::vector<GroupRingElem>> torsionMatrix(const Presentation& p,
                                                      const GroupRing& R) {
  int n = p.rank;
  std::vector<std::vector<GroupRingElem>> m(n, std::vector<GroupRingElem>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      m[i][j] = pushForward(R, p.rank, foxDerivative(p.relations[i], j + 1));
  return m;
}

GroupRingElem groupRingDeterminant(const GroupRing& R,
                                   const std::vector<std::vector<GroupRingElem>>& m) {
  int n = (int)m.size();
  if (n == 0) return R.one();
  // f(mask) = determinant of the submatrix on rows r..n-1 and the columns in
  // mask, where r = n - popcount(mask); expand along row r
  std::unordered_map<unsigned, GroupRingElem> memo;
  auto rec = [&](auto&& self, unsigned mask) -> GroupRingElem {
    if (mask == 0) return R.one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int r = n - __builtin_popcount(mask);
    GroupRingElem acc;
    int pos = 0;
    for (int j = 0; j < n; j++) {
      if (!(mask & (1u << j))) continue;
      if (!m[r][j].isZero()) {
        GroupRingElem term = R.mul(m[r][j], self(self, mask & ~(1u << j)));
        acc = (pos % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
      }
      pos++;
    }
    memo[mask] = acc;
    return acc;
  };
  return rec(rec, (1u << n) - 1);
}

GroupRingElem normalizeTorsion(const GroupRing& R, const GroupRingElem& det,
                               const LaurentPoly& delta) {
  if (det.isZero()) throw PreconditionError("torsion: zero determinant");
  // The T-shift is forced: every coefficient p_s must become symmetric, so
  // a = -(lo_s + hi_s)/2 must be one and the same integer for all s.
  auto supp = R.support(det);
  bool haveA = false;
  int a = 0;
  for (const auto& h : supp) {
    LaurentPoly p = R.coefficientPoly(det, h);
    int sum = p.lowExp() + p.highExp();
    if (sum % 2 != 0)
      throw PreconditionError("torsion: no T-shift symmetrizes all coefficients");
    int cand = -sum / 2;
    if (!haveA) {
      a = cand;
      haveA = true;
    } else if (cand != a) {
      throw PreconditionError("torsion: no T-shift symmetrizes all coefficients");
    }
  }
  // Multiplying by e^h only translates the Spin^c labels, so the
  // lexicographically least admissible h is the identity.
  for (int sign : {1, -1}) {
    GroupRingElem cand = R.mulUnit(det, R.grp.zero(), a, sign);
    bool ok = true;
    for (const auto& h : supp) {
      LaurentPoly p = R.coefficientPoly(cand, h);
      if (!p.isSymmetric() || !hasAlternatingSignPattern(p)) {
        ok = false;
        break;
      }
    }
    if (ok && R.evalEOne(cand) == delta) return cand;
  }
  throw PreconditionError("torsion: no valid normalizing unit");
}

TorsionResult refinedTorsion(const BraidWord& w) {
  FreeEndomorphism f = monodromy(w);
  IntMatrix a = abelianize(f);
  TorsionResult res;
  res.alexander = alexanderFromMonodromy(a); // throws if det(I-A) == 0
  IntMatrix iMinusA = IntMatrix::identity(a.rows);
  for (int i = 0; i < a.rows; i++)
    for (int j = 0; j < a.cols; j++) iMinusA.at(i, j) -= a.at(i, j);
  res.ring.grp = cokernel(iMinusA);
  Presentation p = buildPresentation(f);
  auto m = torsionMatrix(p, res.ring);
  GroupRingElem det = groupRingDeterminant(res.ring, m);
  res.torsion = normalizeTorsion(res.ring, det, res.alexander);
  return res;
}

} // namespace braidcover
