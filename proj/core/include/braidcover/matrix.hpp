#pragma once
#include "ints.hpp"
#include <vector>

namespace braidcover {

// Dense integer matrix with exact arithmetic throughout.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a; // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, Int(0)) {}
  Int& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Int& at(int r, int c) const { return a[(size_t)r * cols + c]; }

  static IntMatrix identity(int n);
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
};

// fraction-free determinant (Bareiss)
Int determinant(const IntMatrix& m);

struct SmithResult {
  IntMatrix u, d, v; // u*m*v == d, u and v unimodular, d diagonal with d1|d2|...
};
SmithResult smithNormalForm(const IntMatrix& m);

// finitely generated abelian group presented as a cokernel Z^n / M Z^n
struct AbelianGroup {
  std::vector<Int> invariantFactors; // each >= 2, divisibility chain
  int freeRank = 0;
  // image of each standard generator e_i, coordinates: one per invariant
  // factor (reduced mod factor) followed by freeRank free coordinates
  std::vector<std::vector<Int>> generatorImages;

  Int order() const; // 0 when freeRank > 0
  bool isTrivial() const { return invariantFactors.empty() && freeRank == 0; }
  std::vector<Int> zero() const;
  std::vector<Int> reduce(std::vector<Int> v) const;
  std::vector<Int> add(const std::vector<Int>& x, const std::vector<Int>& y) const;
  std::vector<Int> neg(const std::vector<Int>& x) const;
  std::vector<Int> mul(const std::vector<Int>& x, long k) const;
  // all elements in lexicographic coordinate order (torsion part only; requires freeRank == 0)
  std::vector<std::vector<Int>> elements() const;
  std::string render(const std::vector<Int>& x) const;  // e.g. "e1^2 e3", identity -> "1"
  std::string renderGroup() const;                      // e.g. "Z/2 + Z/2 + Z"
};

// cokernel of a square integer matrix, with generator images
AbelianGroup cokernel(const IntMatrix& m);

} // namespace braidcover
