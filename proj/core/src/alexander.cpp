#include "braidcover/alexander.hpp"

namespace braidcover {

LaurentPoly charDet(const IntMatrix& a) {
  int n = a.rows;
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      LaurentPoly p = LaurentPoly::monomial(Int(-a.at(i, j)), 1);
      if (i == j) p = p + LaurentPoly(Int(1));
      m[i][j] = p;
    }
  return polyDeterminant(std::move(m));
}

LaurentPoly alexanderFromMonodromy(const IntMatrix& a) {
  LaurentPoly p = charDet(a);
  if (p.evalAtOne() == 0)
    throw PreconditionError(
        "alexanderFromMonodromy: det(I - A) = 0, branched double cover is not "
        "a rational homology sphere");
  return normalizeSymmetric(p);
}

} // namespace braidcover
