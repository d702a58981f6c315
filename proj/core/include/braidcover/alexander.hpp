#pragma once
#include "laurent.hpp"
#include "matrix.hpp"

namespace braidcover {

// det(I - T*A) for an integer matrix A, as a polynomial in T
LaurentPoly charDet(const IntMatrix& a);

// Alexander polynomial of the lifted binding from the abelianized monodromy:
// det(I - T*A) normalized to be symmetric with positive value at T=1.
// Throws PreconditionError when det(I - A) == 0 (not a rational homology sphere).
LaurentPoly alexanderFromMonodromy(const IntMatrix& a);

} // namespace braidcover
