#pragma once
#include "laurent.hpp"
#include "matrix.hpp"
#include <map>
#include <string>
#include <vector>

namespace braidcover {

// Element of Z[H][T^{+-1}] for a finite abelian group H: finitely supported
// map from (h in invariant-factor coordinates, T-exponent) to coefficient.
struct GroupRingElem {
  struct Key {
    std::vector<Int> h;
    int t = 0;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, Int> c;

  bool isZero() const { return c.empty(); }
  bool operator==(const GroupRingElem&) const = default;
};

// ring context: carries the group H so keys can be multiplied
struct GroupRing {
  AbelianGroup grp;

  GroupRingElem zero() const { return {}; }
  GroupRingElem one() const;
  GroupRingElem monomial(std::vector<Int> h, int t, Int coeff) const;

  GroupRingElem add(const GroupRingElem& a, const GroupRingElem& b) const;
  GroupRingElem sub(const GroupRingElem& a, const GroupRingElem& b) const;
  GroupRingElem neg(const GroupRingElem& a) const;
  GroupRingElem mul(const GroupRingElem& a, const GroupRingElem& b) const;
  // multiply by the unit sign * T^tshift * e^h
  GroupRingElem mulUnit(const GroupRingElem& a, const std::vector<Int>& h,
                        int tshift, int sign) const;

  // the Laurent coefficient p_s attached to the group element s = h
  LaurentPoly coefficientPoly(const GroupRingElem& a, const std::vector<Int>& h) const;
  // group elements with nonzero coefficient, in lexicographic order
  std::vector<std::vector<Int>> support(const GroupRingElem& a) const;
  // specialize every group element to 1
  LaurentPoly evalEOne(const GroupRingElem& a) const;

  std::string str(const GroupRingElem& a) const;
};

} // namespace braidcover
