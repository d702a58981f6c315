#include "braidcover/wirtinger.hpp"
#include <algorithm>
#include <map>

namespace braidcover {

LaurentPoly wirtingerAlexander(const LinkDiagram& d) {
  if (!d.isKnotShadowConnected())
    throw PreconditionError("wirtinger: diagram not connected");
  Orientation o = orientDiagram(d);
  if (o.linkComponents != 1)
    throw PreconditionError("wirtinger: diagram is not a knot");
  int n = d.aliveCrossings();
  if (n <= 1) return LaurentPoly(Int(1));

  // trace the knot once, recording each passage (crossing, over?)
  struct Passage {
    int crossing;
    bool over;
  };
  std::vector<Passage> seq;
  auto alive = d.aliveList();
  int start = d.dart(alive[0], 0);
  int cur = start;
  do {
    int c = d.crossingOf(cur), p = d.portOf(cur);
    bool onA = (p == 0 || p == 2);
    seq.push_back({c, onA == d.crossings[c].aOver});
    int m = d.mate[cur];
    cur = d.dart(d.crossingOf(m), (d.portOf(m) + 2) % 4);
  } while (cur != start);

  // rotate so the sequence begins right after an underpass, then number the
  // arcs 0..n-1 between consecutive underpasses
  int firstUnder = -1;
  for (size_t i = 0; i < seq.size(); i++)
    if (!seq[i].over) { firstUnder = (int)i; break; }
  std::rotate(seq.begin(), seq.begin() + firstUnder + 1, seq.end());

  std::vector<int> overArc(d.crossings.size(), -1);
  std::vector<int> underIn(d.crossings.size(), -1), underOut(d.crossings.size(), -1);
  int arc = 0;
  for (auto& ps : seq) {
    if (ps.over) {
      overArc[ps.crossing] = arc;
    } else {
      underIn[ps.crossing] = arc;
      arc = (arc + 1) % n;
      underOut[ps.crossing] = arc;
    }
  }

  // Fox derivative rows of the Wirtinger relations, abelianized
  LaurentPoly t = LaurentPoly::monomial(Int(1), 1);
  LaurentPoly one(Int(1));
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int r = 0; r < n; r++) {
    int c = alive[r];
    int ov = overArc[c], ui = underIn[c], uo = underOut[c];
    if (crossingSign(d, o, c) > 0) {
      m[r][ui] = m[r][ui] + t;
      m[r][uo] = m[r][uo] - one;
      m[r][ov] = m[r][ov] + one - t;
    } else {
      m[r][ui] = m[r][ui] + one;
      m[r][uo] = m[r][uo] - t;
      m[r][ov] = m[r][ov] + t - one;
    }
  }

  // delete the last row and column
  std::vector<std::vector<LaurentPoly>> sub(n - 1, std::vector<LaurentPoly>(n - 1));
  for (int i = 0; i + 1 < n; i++)
    for (int j = 0; j + 1 < n; j++) sub[i][j] = m[i][j];
  LaurentPoly det = polyDeterminant(sub);
  if (det.isZero())
    throw PreconditionError("wirtinger: vanishing Alexander determinant");
  return normalizeSymmetric(det);
}

} // namespace braidcover
