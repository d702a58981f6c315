#pragma once
#include "braid.hpp"
#include "matrix.hpp"
#include <vector>

namespace braidcover {

// Freely reduced word in a free group.  Letter k>0 means generator g_k,
// letter -k its inverse.  Generators are 1-based.
struct FreeWord {
  std::vector<int> letters;

  static FreeWord gen(int i) { return FreeWord{{i}}; }
  bool operator==(const FreeWord&) const = default;
  std::string str(const std::string& sym = "g") const;
};

FreeWord reduced(std::vector<int> letters);
FreeWord concat(const FreeWord& a, const FreeWord& b);
FreeWord inverted(const FreeWord& w);

// endomorphism of the free group of given rank, by generator images
struct FreeEndomorphism {
  int rank = 0;
  std::vector<FreeWord> images; // images[i] = image of generator i+1

  static FreeEndomorphism identity(int rank);
  FreeWord apply(const FreeWord& w) const;
};

// (f o g)(x) = f(g(x))
FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g);

// Dehn twist D_i^sign on the free group of the given rank:
// positive twist fixes g_i, sends g_{i+1} -> g_i g_{i+1}, g_{i-1} -> g_i^-1 g_{i-1}
FreeEndomorphism dehnTwist(int i, int sign, int rank);

// monodromy of an annular braid word on b strands, acting on the free group
// of rank b-1; the rightmost braid letter acts first
FreeEndomorphism monodromy(const BraidWord& w);

// abelianization matrix: column j = exponent vector of images[j]
IntMatrix abelianize(const FreeEndomorphism& f);

} // namespace braidcover
