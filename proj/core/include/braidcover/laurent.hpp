#pragma once
#include "ints.hpp"
#include <map>
#include <vector>

namespace braidcover {

// Laurent polynomial in one variable T with integer coefficients.
struct LaurentPoly {
  std::map<int, Int> c; // exponent -> coefficient, no zero entries

  LaurentPoly() = default;
  explicit LaurentPoly(Int k) { if (k != 0) c[0] = std::move(k); }
  static LaurentPoly monomial(Int k, int e) {
    LaurentPoly p;
    if (k != 0) p.c[e] = std::move(k);
    return p;
  }

  bool isZero() const { return c.empty(); }
  Int coeff(int e) const {
    auto it = c.find(e);
    return it == c.end() ? Int(0) : it->second;
  }
  int lowExp() const { return c.begin()->first; }
  int highExp() const { return c.rbegin()->first; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly shifted(int e) const;  // multiply by T^e
  LaurentPoly conjugated() const;    // T -> T^-1
  Int evalAtOne() const;
  Int evalAtMinusOne() const;
  bool isSymmetric() const; // equal to its conjugate
  std::string str(const std::string& var = "T") const;
};

// exact division; throws if remainder nonzero
LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& b);

// determinant of a matrix of Laurent polynomials (fraction-free Bareiss)
LaurentPoly polyDeterminant(std::vector<std::vector<LaurentPoly>> m);

// Normalize p by +-T^a so that it is symmetric under T -> T^-1 and p(1) > 0.
// Throws PreconditionError if no such unit exists.
LaurentPoly normalizeSymmetric(const LaurentPoly& p);

// (-1)^j sign pattern: coefficient of T^j is 0 or has sign (-1)^j
bool hasAlternatingSignPattern(const LaurentPoly& p);

} // namespace braidcover
