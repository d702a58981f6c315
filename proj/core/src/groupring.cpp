#include "braidcover/groupring.hpp"
#include <set>

namespace braidcover {

GroupRingElem GroupRing::one() const { return monomial(grp.zero(), 0, Int(1)); }

GroupRingElem GroupRing::monomial(std::vector<Int> h, int t, Int coeff) const {
  GroupRingElem e;
  if (coeff != 0) e.c[{grp.reduce(std::move(h)), t}] = std::move(coeff);
  return e;
}

GroupRingElem GroupRing::add(const GroupRingElem& a, const GroupRingElem& b) const {
  GroupRingElem r = a;
  for (const auto& [k, v] : b.c) {
    Int& slot = r.c[k];
    slot += v;
    if (slot == 0) r.c.erase(k);
  }
  return r;
}

GroupRingElem GroupRing::neg(const GroupRingElem& a) const {
  GroupRingElem r = a;
  for (auto& [k, v] : r.c) v = -v;
  return r;
}

GroupRingElem GroupRing::sub(const GroupRingElem& a, const GroupRingElem& b) const {
  return add(a, neg(b));
}

GroupRingElem GroupRing::mul(const GroupRingElem& a, const GroupRingElem& b) const {
  GroupRingElem r;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) {
      GroupRingElem::Key k{grp.add(ka.h, kb.h), ka.t + kb.t};
      Int& slot = r.c[k];
      slot += va * vb;
      if (slot == 0) r.c.erase(k);
    }
  return r;
}

GroupRingElem GroupRing::mulUnit(const GroupRingElem& a, const std::vector<Int>& h,
                                 int tshift, int sign) const {
  GroupRingElem r;
  for (const auto& [k, v] : a.c)
    r.c[{grp.add(k.h, h), k.t + tshift}] = sign >= 0 ? v : -v;
  return r;
}

LaurentPoly GroupRing::coefficientPoly(const GroupRingElem& a,
                                       const std::vector<Int>& h) const {
  std::vector<Int> hr = grp.reduce(h);
  LaurentPoly p;
  for (const auto& [k, v] : a.c)
    if (k.h == hr) p.c[k.t] = v;
  return p;
}

std::vector<std::vector<Int>> GroupRing::support(const GroupRingElem& a) const {
  std::set<std::vector<Int>> s;
  for (const auto& [k, v] : a.c) s.insert(k.h);
  return {s.begin(), s.end()};
}

LaurentPoly GroupRing::evalEOne(const GroupRingElem& a) const {
  LaurentPoly p;
  for (const auto& [k, v] : a.c) {
    Int& slot = p.c[k.t];
    slot += v;
    if (slot == 0) p.c.erase(k.t);
  }
  return p;
}

std::string GroupRing::str(const GroupRingElem& a) const {
  if (a.isZero()) return "0";
  std::string out;
  for (const auto& h : support(a)) {
    LaurentPoly p = coefficientPoly(a, h);
    std::string hs = grp.render(h);
    std::string ps = p.str();
    std::string term;
    if (hs == "1") {
      term = (p.c.size() > 1) ? "(" + ps + ")" : ps;
    } else if (ps == "1") {
      term = hs;
    } else if (p.c.size() > 1 || ps[0] == '-') {
      term = "(" + ps + ")*" + hs;
    } else {
      term = ps + "*" + hs;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

} // namespace braidcover
