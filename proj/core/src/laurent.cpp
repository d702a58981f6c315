#include "braidcover/laurent.hpp"
#include <sstream>

namespace braidcover {

static void addTerm(std::map<int, Int>& m, int e, const Int& k) {
  if (k == 0) return;
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, k);
  } else {
    it->second += k;
    if (it->second == 0) m.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, k] : o.c) addTerm(r.c, e, k);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, k] : o.c) addTerm(r.c, e, Int(-k));
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, k1] : c)
    for (auto& [e2, k2] : o.c) addTerm(r.c, e1 + e2, k1 * k2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, k] : c) r.c[e] = -k;
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r;
  for (auto& [e1, k] : c) r.c[e1 + e] = k;
  return r;
}

LaurentPoly LaurentPoly::conjugated() const {
  LaurentPoly r;
  for (auto& [e, k] : c) r.c[-e] = k;
  return r;
}

Int LaurentPoly::evalAtOne() const {
  Int s = 0;
  for (auto& [e, k] : c) s += k;
  return s;
}

Int LaurentPoly::evalAtMinusOne() const {
  Int s = 0;
  for (auto& [e, k] : c) s += (e % 2 == 0) ? k : Int(-k);
  return s;
}

bool LaurentPoly::isSymmetric() const { return *this == conjugated(); }

std::string LaurentPoly::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, k] : c) {
    Int v = k;
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (v != 1 || e == 0) os << v.str();
    if (e != 0) {
      if (v != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.isZero()) throw PreconditionError("divExact: division by zero");
  if (a.isZero()) return a;
  LaurentPoly rem = a;
  LaurentPoly q;
  int blo = b.lowExp(), bhi = b.highExp();
  const Int& blead = b.c.rbegin()->second;
  while (!rem.isZero()) {
    int rhi = rem.highExp();
    if (rhi - rem.lowExp() < bhi - blo)
      throw PreconditionError("divExact: inexact division (degree)");
    Int lead = rem.c.rbegin()->second;
    if (lead % blead != 0) throw PreconditionError("divExact: inexact division");
    Int f = lead / blead;
    int sh = rhi - bhi;
    q = q + LaurentPoly::monomial(f, sh);
    rem = rem - b.shifted(sh) * LaurentPoly(f);
    if (!rem.isZero() && rem.highExp() >= rhi)
      throw PreconditionError("divExact: no progress");
  }
  return q;
}

LaurentPoly polyDeterminant(std::vector<std::vector<LaurentPoly>> m) {
  int n = (int)m.size();
  if (n == 0) return LaurentPoly(Int(1));
  LaurentPoly prev(Int(1));
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (m[k][k].isZero()) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (!m[i][k].isZero()) { p = i; break; }
      if (p < 0) return LaurentPoly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++)
        m[i][j] = divExact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  LaurentPoly d = m[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

LaurentPoly normalizeSymmetric(const LaurentPoly& p) {
  if (p.isZero()) throw PreconditionError("normalizeSymmetric: zero polynomial");
  int lo = p.lowExp(), hi = p.highExp();
  if ((lo + hi) % 2 != 0)
    throw PreconditionError("normalizeSymmetric: no symmetric unit shift exists");
  LaurentPoly s = p.shifted(-(lo + hi) / 2);
  if (!s.isSymmetric())
    throw PreconditionError("normalizeSymmetric: polynomial is not symmetric");
  if (s.evalAtOne() < 0) s = -s;
  if (s.evalAtOne() == 0) {
    // fall back: make the top coefficient positive
    if (s.c.rbegin()->second < 0) s = -s;
  }
  return s;
}

bool hasAlternatingSignPattern(const LaurentPoly& p) {
  for (auto& [e, k] : p.c) {
    bool even = ((e % 2) + 2) % 2 == 0;
    if (even && k < 0) return false;
    if (!even && k > 0) return false;
  }
  return true;
}

} // namespace braidcover
