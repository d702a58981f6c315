#pragma once
#include "freegroup.hpp"
#include "groupring.hpp"
#include <map>

namespace braidcover {

// Presentation of the complement of the lifted binding: generators
// gamma_1..gamma_rank (letters +-1..+-rank) and t (letter +-(rank+1)),
// one relation r_i = gamma_i^-1 t R(gamma_i) t^-1 per surface generator.
struct Presentation {
  int rank = 0;
  std::vector<std::vector<int>> relations; // reduced letter strings
};

Presentation buildPresentation(const FreeEndomorphism& f);

// formal Z-linear combination of reduced free words (group ring of the free
// group on {gamma_1..gamma_rank, t})
using WordSum = std::map<std::vector<int>, Int>;

WordSum wordSumOfWord(const std::vector<int>& w);
WordSum wordSumMul(const WordSum& a, const WordSum& b);
WordSum wordSumAdd(const WordSum& a, const WordSum& b);

// Fox derivative with respect to generator x (1-based letter index), exact
// in the free group ring
WordSum foxDerivative(const std::vector<int>& w, int x);

// pushforward gamma_k -> generatorImages[k-1] of R.grp, t -> T
GroupRingElem pushWord(const GroupRing& R, int rank, const std::vector<int>& w);
GroupRingElem pushForward(const GroupRing& R, int rank, const WordSum& s);

// entry (i,j) = pushforward of d r_i / d gamma_j; the t-column is omitted
std::vector<std::vector<GroupRingElem>> torsionMatrix(const Presentation& p,
                                                      const GroupRing& R);

// determinant by cofactor expansion with memoized minors
GroupRingElem groupRingDeterminant(const GroupRing& R,
                                   const std::vector<std::vector<GroupRingElem>>& m);

// Normalize det by a unit +-T^a e^h so that every coefficient p_s(T) is
// symmetric under T -> T^-1, e -> 1 specializes to delta, and coefficients
// of T^j carry sign (-1)^j; lexicographically least h is chosen.
GroupRingElem normalizeTorsion(const GroupRing& R, const GroupRingElem& det,
                               const LaurentPoly& delta);

struct TorsionResult {
  GroupRing ring;        // carries H1 with generator images
  GroupRingElem torsion; // normalized (T-1) * refined torsion
  LaurentPoly alexander; // normalized Alexander polynomial
};

TorsionResult refinedTorsion(const BraidWord& w);

} // namespace braidcover
