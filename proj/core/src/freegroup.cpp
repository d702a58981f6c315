#include "braidcover/freegroup.hpp"
#include <sstream>

namespace braidcover {

std::string FreeWord::str(const std::string& sym) const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) j++;
    long e = (long)(j - i) * (letters[i] > 0 ? 1 : -1);
    if (i > 0) os << " ";
    os << sym << std::abs(letters[i]);
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

FreeWord reduced(std::vector<int> letters) {
  std::vector<int> out;
  for (int l : letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord{std::move(out)};
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  std::vector<int> l = a.letters;
  l.insert(l.end(), b.letters.begin(), b.letters.end());
  return reduced(std::move(l));
}

FreeWord inverted(const FreeWord& w) {
  std::vector<int> l;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) l.push_back(-*it);
  return FreeWord{std::move(l)};
}

FreeEndomorphism FreeEndomorphism::identity(int rank) {
  FreeEndomorphism f;
  f.rank = rank;
  for (int i = 1; i <= rank; i++) f.images.push_back(FreeWord::gen(i));
  return f;
}

FreeWord FreeEndomorphism::apply(const FreeWord& w) const {
  std::vector<int> out;
  for (int l : w.letters) {
    const FreeWord& img = images[std::abs(l) - 1];
    if (l > 0)
      out.insert(out.end(), img.letters.begin(), img.letters.end());
    else {
      FreeWord inv = inverted(img);
      out.insert(out.end(), inv.letters.begin(), inv.letters.end());
    }
  }
  return reduced(std::move(out));
}

FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g) {
  FreeEndomorphism r;
  r.rank = g.rank;
  for (const FreeWord& w : g.images) r.images.push_back(f.apply(w));
  return r;
}

FreeEndomorphism dehnTwist(int i, int sign, int rank) {
  if (i < 1 || i > rank) throw PreconditionError("dehnTwist: index out of range");
  FreeEndomorphism f = FreeEndomorphism::identity(rank);
  // the insertion side alternates with the parity of the twisted curve, which
  // keeps the composite conjugate to the orbifold (free product of Z/2's)
  // action of the braid group on the branched double cover for every word
  int g = sign > 0 ? i : -i;
  if (i % 2 == 1) {
    if (i + 1 <= rank) f.images[i] = reduced({g, i + 1});
    if (i - 1 >= 1) f.images[i - 2] = reduced({i - 1, -g});
  } else {
    if (i + 1 <= rank) f.images[i] = reduced({i + 1, g});
    if (i - 1 >= 1) f.images[i - 2] = reduced({-g, i - 1});
  }
  return f;
}

FreeEndomorphism monodromy(const BraidWord& w) {
  int rank = w.strands - 1;
  FreeEndomorphism acc = FreeEndomorphism::identity(rank);
  // rightmost letter acts first: phi = D_{l1} o D_{l2} o ... o D_{lk}
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    acc = compose(dehnTwist(it->index, it->sign, rank), acc);
  return acc;
}

IntMatrix abelianize(const FreeEndomorphism& f) {
  IntMatrix m(f.rank, f.rank);
  for (int j = 0; j < f.rank; j++)
    for (int l : f.images[j].letters) {
      int g = std::abs(l) - 1;
      m.at(g, j) += (l > 0 ? 1 : -1);
    }
  return m;
}

} // namespace braidcover
