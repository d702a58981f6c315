#include "braidcover/diagram.hpp"
#include <algorithm>
#include <map>
#include <set>

namespace braidcover {

int LinkDiagram::aliveCrossings() const {
  int n = 0;
  for (const auto& c : crossings)
    if (c.alive) n++;
  return n;
}

std::vector<int> LinkDiagram::aliveList() const {
  std::vector<int> v;
  for (int i = 0; i < (int)crossings.size(); i++)
    if (crossings[i].alive) v.push_back(i);
  return v;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; i++) p[i] = i;
  }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

int LinkDiagram::shadowPieces() const {
  auto alive = aliveList();
  UnionFind uf((int)crossings.size());
  for (int c : alive)
    for (int p = 0; p < 4; p++) {
      int m = mate[dart(c, p)];
      uf.unite(c, crossingOf(m));
    }
  std::set<int> roots;
  for (int c : alive) roots.insert(uf.find(c));
  return (int)roots.size() + (int)freeCircleWind.size();
}

bool LinkDiagram::isKnotShadowConnected() const { return shadowPieces() == 1; }

LinkDiagram closureDiagram(const BraidWord& w) {
  LinkDiagram d;
  int k = (int)w.letters.size();
  d.crossings.resize(k);
  d.mate.assign(4 * k, -1);
  d.wind.assign(4 * k, 0);
  for (int j = 0; j < k; j++) d.crossings[j].aOver = (w.letters[j].sign > 0);

  // attachments per strand position, in top-to-bottom order:
  // letter j at index i: position i has top port 3 (NW) and bottom port 0 (SW);
  // position i+1 has top port 2 (NE) and bottom port 1 (SE)
  for (int p = 1; p <= w.strands; p++) {
    std::vector<std::pair<int, int>> att; // (top dart, bottom dart) per letter
    for (int j = 0; j < k; j++) {
      int i = w.letters[j].index;
      if (i == p) att.push_back({d.dart(j, 3), d.dart(j, 0)});
      else if (i + 1 == p) att.push_back({d.dart(j, 2), d.dart(j, 1)});
    }
    if (att.empty()) {
      d.freeCircleWind.push_back(1);
      continue;
    }
    for (size_t t = 0; t + 1 < att.size(); t++) {
      int bot = att[t].second, top = att[t + 1].first;
      d.mate[bot] = top;
      d.mate[top] = bot;
    }
    // closure arc from the bottom of the braid box around the annulus back
    // to the top; it crosses the radial cut once
    int bot = att.back().second, top = att.front().first;
    d.mate[bot] = top;
    d.mate[top] = bot;
    d.wind[bot] = 1;
    d.wind[top] = -1;
  }
  return d;
}

LinkDiagram platDiagram(const std::vector<BraidLetter>& word, bool crossedBottom) {
  LinkDiagram d;
  int k = (int)word.size();
  d.crossings.resize(k);
  d.mate.assign(4 * k, -1);
  d.wind.assign(4 * k, 0);
  for (int j = 0; j < k; j++) d.crossings[j].aOver = (word[j].sign > 0);

  std::vector<std::vector<std::pair<int, int>>> att(5); // per strand 1..4
  for (int j = 0; j < k; j++) {
    int i = word[j].index; // 1, 2 or 3: strands (i, i+1)
    att[i].push_back({d.dart(j, 3), d.dart(j, 0)});
    att[i + 1].push_back({d.dart(j, 2), d.dart(j, 1)});
  }
  // internal matings within each strand column
  for (int p = 1; p <= 4; p++)
    for (size_t t = 0; t + 1 < att[p].size(); t++) {
      int bot = att[p][t].second, top = att[p][t + 1].first;
      d.mate[bot] = top;
      d.mate[top] = bot;
    }
  // cap pairing on the 8 plat endpoints: top is always (1,2)(3,4); the
  // crossed bottom (2,3)(1,4) closes a word ending in a side twist region
  int capTop[5] = {0, 2, 1, 4, 3};
  int capBotStd[5] = {0, 2, 1, 4, 3};
  int capBotCrossed[5] = {0, 4, 3, 2, 1};
  const int* capBot = crossedBottom ? capBotCrossed : capBotStd;
  // each strand column is one edge in the endpoint graph; caps are the other
  // edges, so endpoints fall into disjoint cycles.  Splice the free column
  // darts along each cycle; dartless cycles become free circles.
  bool seenTop[5] = {}, seenBot[5] = {};
  for (int p0 = 1; p0 <= 4; p0++) {
    if (seenTop[p0]) continue;
    std::vector<std::pair<int, int>> segs; // (enter dart, exit dart)
    bool top = true;
    int p = p0;
    do {
      (top ? seenTop : seenBot)[p] = 1;
      (top ? seenBot : seenTop)[p] = 1;
      if (!att[p].empty()) {
        int tDart = att[p].front().first, bDart = att[p].back().second;
        segs.push_back(top ? std::make_pair(tDart, bDart)
                           : std::make_pair(bDart, tDart));
      }
      // exit the column on the other side, then follow that side's cap
      bool exitTop = !top;
      int q = exitTop ? capTop[p] : capBot[p];
      top = exitTop;
      p = q;
    } while (!(top && p == p0));
    if (segs.empty()) {
      d.freeCircleWind.push_back(0);
      continue;
    }
    for (size_t i = 0; i < segs.size(); i++) {
      int a = segs[i].second, b = segs[(i + 1) % segs.size()].first;
      d.mate[a] = b;
      d.mate[b] = a;
    }
  }
  return d;
}

LinkDiagram resolve(const LinkDiagram& d0, int c, int r) {
  LinkDiagram d = d0;
  if (!d.crossings[c].alive) throw PreconditionError("resolve: crossing not alive");
  int pair[4]; // pair[p] = partner port under the smoothing
  if (r == 0) {
    pair[0] = 3; pair[3] = 0; pair[1] = 2; pair[2] = 1;
  } else {
    pair[0] = 1; pair[1] = 0; pair[2] = 3; pair[3] = 2;
  }
  bool internal[4];
  for (int p = 0; p < 4; p++)
    internal[p] = d.crossingOf(d.mate[d.dart(c, p)]) == c;
  bool done[4] = {false, false, false, false};

  // splice chains starting from external darts
  for (int p = 0; p < 4; p++) {
    if (done[p]) continue;
    int dp = d.dart(c, p);
    int x = d.mate[dp];
    if (internal[p]) continue;
    // arrive at c via port p, follow smoothing until we exit
    int acc = 0;
    int cur = p;
    for (;;) {
      done[cur] = true;
      int out = pair[cur];
      done[out] = true;
      int dOut = d.dart(c, out);
      int y = d.mate[dOut];
      acc += d.wind[dOut];
      if (d.crossingOf(y) != c) {
        d.mate[x] = y;
        d.mate[y] = x;
        int wx = d.wind[x] + acc;
        d.wind[x] = wx;
        d.wind[y] = -wx;
        break;
      }
      cur = d.portOf(y);
    }
  }
  // remaining internal cycles become free circles
  for (int p = 0; p < 4; p++) {
    if (done[p] || !internal[p]) continue;
    int acc = 0;
    int cur = p;
    for (;;) {
      done[cur] = true;
      int out = pair[cur];
      done[out] = true;
      int dOut = d.dart(c, out);
      acc += d.wind[dOut];
      int y = d.mate[dOut];
      done[d.portOf(y)] = true;
      if (d.portOf(y) == p) break;
      cur = d.portOf(y);
    }
    d.freeCircleWind.push_back(acc);
  }
  d.crossings[c].alive = false;
  for (int p = 0; p < 4; p++) {
    d.mate[d.dart(c, p)] = -1;
    d.wind[d.dart(c, p)] = 0;
  }
  return d;
}

Orientation orientDiagram(const LinkDiagram& d) {
  Orientation o;
  int n = (int)d.crossings.size();
  o.aForward.assign(n, 0);
  o.bForward.assign(n, 0);
  std::vector<char> seen(4 * n, 0);
  for (int c : d.aliveList()) {
    for (int p0 = 0; p0 < 4; p0++) {
      int start = d.dart(c, p0);
      if (seen[start]) continue;
      // trace the strand starting by leaving via 'start'
      int wsum = 0;
      int cur = start;
      do {
        seen[cur] = 1;
        int cc = d.crossingOf(cur), pp = d.portOf(cur);
        // record flow direction at this crossing
        if (pp == 2) o.aForward[cc] = 1;
        if (pp == 0) o.aForward[cc] = 0;
        if (pp == 3) o.bForward[cc] = 1;
        if (pp == 1) o.bForward[cc] = 0;
        wsum += d.wind[cur];
        int m = d.mate[cur];
        seen[m] = 1; // arrival dart: not an outgoing dart of this traversal
        cur = d.dart(d.crossingOf(m), (d.portOf(m) + 2) % 4);
      } while (cur != start);
      o.componentWinding.push_back(wsum);
      o.linkComponents++;
    }
  }
  for (int w : d.freeCircleWind) {
    o.componentWinding.push_back(w);
    o.linkComponents++;
  }
  return o;
}

int crossingSign(const LinkDiagram& d, const Orientation& o, int c) {
  // direction angles in units of 90 degrees: strand A forward points NE (0.5
  // offset dropped, use port directions): A forward = toward port 2,
  // B forward = toward port 3.  Positive crossing: under-direction is 90deg
  // counterclockwise from over-direction.
  int aDir = o.aForward[c] ? 2 : 0; // exits via this port
  int bDir = o.bForward[c] ? 3 : 1;
  int over = d.crossings[c].aOver ? aDir : bDir;
  int under = d.crossings[c].aOver ? bDir : aDir;
  int diff = ((under - over) % 4 + 4) % 4; // 1 = +90deg CCW, 3 = -90deg
  return diff == 1 ? 1 : -1;
}

bool isAlternatingDiagram(const LinkDiagram& d) {
  int n = (int)d.crossings.size();
  std::vector<char> seen(4 * n, 0);
  for (int c : d.aliveList()) {
    for (int p0 = 0; p0 < 4; p0++) {
      int start = d.dart(c, p0);
      if (seen[start]) continue;
      int cur = start;
      int prevOver = -1, firstOver = -1;
      bool ok = true;
      do {
        seen[cur] = 1;
        int cc = d.crossingOf(cur), pp = d.portOf(cur);
        bool onA = (pp == 0 || pp == 2);
        bool over = (onA == d.crossings[cc].aOver);
        if (firstOver < 0) firstOver = over;
        if (prevOver >= 0 && prevOver == (int)over) ok = false;
        prevOver = over;
        int m = d.mate[cur];
        seen[m] = 1;
        cur = d.dart(d.crossingOf(m), (d.portOf(m) + 2) % 4);
      } while (cur != start);
      if (!ok) return false;
      // the closing passage must alternate with the first one too
      if (prevOver >= 0 && prevOver == firstOver) return false;
    }
  }
  return true;
}

FaceData faceData(const LinkDiagram& d) {
  FaceData f;
  int n = (int)d.crossings.size();
  f.faceOf.assign(4 * n, -1);
  for (int c : d.aliveList())
    for (int p = 0; p < 4; p++) {
      int start = d.dart(c, p);
      if (f.faceOf[start] >= 0) continue;
      int id = (int)f.faces.size();
      f.faces.push_back({});
      int cur = start;
      do {
        f.faceOf[cur] = id;
        f.faces[id].push_back(cur);
        int m = d.mate[cur];
        cur = d.dart(d.crossingOf(m), (d.portOf(m) + 1) % 4);
      } while (cur != start);
    }
  // 2-color faces by BFS across edges
  f.color.assign(f.faces.size(), -1);
  for (size_t s = 0; s < f.faces.size(); s++) {
    if (f.color[s] >= 0) continue;
    f.color[s] = 0;
    std::vector<int> stack{(int)s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int dart : f.faces[u]) {
        int v = f.faceOf[d.mate[dart]];
        if (f.color[v] < 0) {
          f.color[v] = 1 - f.color[u];
          stack.push_back(v);
        } else if (f.color[v] == f.color[u]) {
          throw PreconditionError("faceData: checkerboard coloring failed");
        }
      }
    }
  }
  return f;
}

namespace {

// corner k of crossing c (between ports k and k+1)
int cornerFace(const LinkDiagram& d, const FaceData& f, int c, int k) {
  return f.faceOf[d.dart(c, (k + 1) % 4)];
}

struct GoeritzData {
  IntMatrix g;                 // full Goeritz matrix over black faces
  std::vector<int> blackIndex; // face -> black index or -1
  std::vector<int> eta;        // crossing -> +-1
  std::vector<char> black13;   // crossing -> black corners are {1,3}
};

GoeritzData goeritzData(const LinkDiagram& d, const FaceData& f, int blackColor) {
  GoeritzData gd;
  gd.blackIndex.assign(f.faces.size(), -1);
  int nb = 0;
  for (size_t i = 0; i < f.faces.size(); i++)
    if (f.color[i] == blackColor) gd.blackIndex[i] = nb++;
  gd.g = IntMatrix(nb, nb);
  gd.eta.assign(d.crossings.size(), 0);
  gd.black13.assign(d.crossings.size(), 0);
  for (int c : d.aliveList()) {
    int f0 = cornerFace(d, f, c, 0), f1 = cornerFace(d, f, c, 1);
    int f2 = cornerFace(d, f, c, 2), f3 = cornerFace(d, f, c, 3);
    if (f.color[f0] != f.color[f2] || f.color[f1] != f.color[f3] ||
        f.color[f0] == f.color[f1])
      throw PreconditionError("goeritz: corner coloring inconsistent");
    bool b13 = (f.color[f1] == blackColor);
    gd.black13[c] = b13;
    // eta: +1 when the over strand separates the two black corners so that
    // rotating it counterclockwise sweeps first through black
    int eta;
    if (d.crossings[c].aOver)
      eta = b13 ? 1 : -1;
    else
      eta = b13 ? -1 : 1;
    gd.eta[c] = eta;
    int u = gd.blackIndex[b13 ? f1 : f0];
    int v = gd.blackIndex[b13 ? f3 : f2];
    if (u == v) continue;
    gd.g.at(u, v) -= eta;
    gd.g.at(v, u) -= eta;
    gd.g.at(u, u) += eta;
    gd.g.at(v, v) += eta;
  }
  return gd;
}

IntMatrix deleteLast(const IntMatrix& m) {
  IntMatrix r(m.rows - 1, m.cols - 1);
  for (int i = 0; i + 1 < m.rows; i++)
    for (int j = 0; j + 1 < m.cols; j++) r.at(i, j) = m.at(i, j);
  return r;
}

} // namespace

IntMatrix goeritzMatrix(const LinkDiagram& d, int blackColor) {
  FaceData f = faceData(d);
  return deleteLast(goeritzData(d, f, blackColor).g);
}

Int diagramDeterminant(const LinkDiagram& d) {
  int pieces = d.shadowPieces();
  if (pieces == 0) throw PreconditionError("determinant: empty diagram");
  if (pieces > 1) return 0;
  if (d.aliveCrossings() == 0) return 1; // single circle
  return absInt(determinant(goeritzMatrix(d, 0)));
}

int symmetricSignature(const IntMatrix& m) {
  int n = m.rows;
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) a[i][j] = Rat(m.at(i, j));
  int sig = 0;
  std::vector<char> used(n, 0);
  for (;;) {
    // find a nonzero diagonal pivot among unused rows
    int piv = -1;
    for (int i = 0; i < n; i++)
      if (!used[i] && a[i][i] != 0) { piv = i; break; }
    if (piv < 0) {
      // look for an off-diagonal nonzero pair; hyperbolic pair contributes 0
      int pi = -1, pj = -1;
      for (int i = 0; i < n && pi < 0; i++)
        if (!used[i])
          for (int j = i + 1; j < n; j++)
            if (!used[j] && a[i][j] != 0) { pi = i; pj = j; break; }
      if (pi < 0) break; // remaining block is zero
      // row/col i += row/col j makes the diagonal entry 2*a[i][j] != 0
      for (int k = 0; k < n; k++) a[pi][k] += a[pj][k];
      for (int k = 0; k < n; k++) a[k][pi] += a[k][pj];
      continue;
    }
    used[piv] = 1;
    sig += a[piv][piv] > 0 ? 1 : -1;
    Rat dgn = a[piv][piv];
    for (int i = 0; i < n; i++) {
      if (used[i] || a[i][piv] == 0) continue;
      Rat fct = a[i][piv] / dgn;
      for (int k = 0; k < n; k++) a[i][k] -= fct * a[piv][k];
      for (int k = 0; k < n; k++) a[k][i] -= fct * a[k][piv];
    }
  }
  return sig;
}

int diagramSignature(const LinkDiagram& d) {
  if (!d.isKnotShadowConnected())
    throw PreconditionError("signature: diagram not connected");
  if (d.aliveCrossings() == 0) return 0;
  FaceData f = faceData(d);
  Orientation o = orientDiagram(d);
  GoeritzData gd = goeritzData(d, f, 0);
  int mu = 0;
  for (int c : d.aliveList()) {
    // type II: relative to the black corner axis the two oriented strands
    // run antiparallel (convention pinned by signature tests on both colorings)
    bool typeII = gd.black13[c] ? (o.aForward[c] == o.bForward[c])
                                : (o.aForward[c] != o.bForward[c]);
    if (typeII) mu += gd.eta[c];
  }
  return symmetricSignature(deleteLast(gd.g)) - mu;
}

// ---------- leaf analysis ----------

namespace {

struct Block {
  std::vector<int> verts;                  // crossings
  std::vector<std::pair<int, int>> edges;  // dart pairs (d, mate)
  int windingAbs = 0;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<std::vector<int>> blocksOfVertex; // crossing -> block ids
};

// biconnected components of the shadow multigraph
BlockDecomposition blockDecompose(const LinkDiagram& d) {
  // collect edges (one per dart pair)
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> inc(d.crossings.size());
  for (int c : d.aliveList())
    for (int p = 0; p < 4; p++) {
      int dd = d.dart(c, p);
      if (dd < d.mate[dd]) {
        inc[c].push_back((int)edges.size());
        int oc = d.crossingOf(d.mate[dd]);
        if (oc != c) inc[oc].push_back((int)edges.size());
        edges.push_back({dd, d.mate[dd]});
      }
    }
  int n = (int)d.crossings.size();
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<char> edgeUsed(edges.size(), 0);
  std::vector<int> estack;
  BlockDecomposition bd;
  bd.blocksOfVertex.assign(n, {});
  int counter = 0;

  // iterative DFS
  struct Frame {
    int v, parentEdge;
    size_t ei;
  };
  for (int root : d.aliveList()) {
    if (num[root] >= 0) continue;
    std::vector<Frame> st{{root, -1, 0}};
    num[root] = low[root] = counter++;
    while (!st.empty()) {
      Frame& fr = st.back();
      if (fr.ei < inc[fr.v].size()) {
        int e = inc[fr.v][fr.ei++];
        if (e == fr.parentEdge || edgeUsed[e]) continue;
        int a = d.crossingOf(edges[e].first), b = d.crossingOf(edges[e].second);
        int w = (a == fr.v) ? b : a;
        edgeUsed[e] = 1;
        estack.push_back(e);
        if (w == fr.v) {
          // self-loop: its own block
          Block blk;
          blk.verts = {fr.v};
          blk.edges = {edges[e]};
          estack.pop_back();
          bd.blocksOfVertex[fr.v].push_back((int)bd.blocks.size());
          bd.blocks.push_back(blk);
          continue;
        }
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          st.push_back({w, e, 0});
        } else {
          low[fr.v] = std::min(low[fr.v], num[w]);
        }
      } else {
        int v = fr.v;
        int pe = fr.parentEdge;
        st.pop_back();
        if (!st.empty()) {
          int u = st.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] >= num[u]) {
            // pop a block
            Block blk;
            std::set<int> vs;
            for (;;) {
              int e = estack.back();
              estack.pop_back();
              blk.edges.push_back(edges[e]);
              vs.insert(d.crossingOf(edges[e].first));
              vs.insert(d.crossingOf(edges[e].second));
              if (e == pe) break;
            }
            blk.verts.assign(vs.begin(), vs.end());
            int id = (int)bd.blocks.size();
            for (int x : blk.verts) bd.blocksOfVertex[x].push_back(id);
            bd.blocks.push_back(blk);
          }
        }
      }
    }
  }
  return bd;
}

} // namespace

LeafChain leafChain(const LinkDiagram& d) {
  Orientation o = orientDiagram(d);
  if (o.linkComponents != 1)
    throw PreconditionError("leafChain: leaf is not a single circle");
  int totalWind = o.componentWinding[0];
  if (((totalWind % 2) + 2) % 2 != 1)
    throw PreconditionError("leafChain: leaf winding is even");
  if (d.aliveCrossings() == 0) {
    if (std::abs(totalWind) != 1)
      throw PreconditionError("leafChain: crossingless leaf with |winding| != 1");
    return {1, {}};
  }

  BlockDecomposition bd = blockDecompose(d);
  int nb = (int)bd.blocks.size();
  // every crossing must lie in exactly two blocks (all crossings are cut
  // vertices of a leaf), and every block must be a cycle
  for (int c : d.aliveList())
    if (bd.blocksOfVertex[c].size() != 2)
      throw PreconditionError("leafChain: diagram is not a leaf (non-cut crossing)");
  for (auto& blk : bd.blocks)
    if (blk.edges.size() != blk.verts.size())
      throw PreconditionError("leafChain: block is not a cycle");

  // winding of each block cycle
  std::vector<int> blockWind(nb, 0);
  for (int bi = 0; bi < nb; bi++) {
    auto& blk = bd.blocks[bi];
    // walk the cycle: at each crossing pick the unused block edge
    std::map<int, std::vector<int>> ed; // crossing -> darts of block edges
    for (auto& [a, b] : blk.edges) {
      ed[d.crossingOf(a)].push_back(a);
      ed[d.crossingOf(b)].push_back(b);
    }
    std::set<int> usedDarts;
    int start = blk.edges[0].first;
    int cur = start;
    int wsum = 0;
    do {
      usedDarts.insert(cur);
      usedDarts.insert(d.mate[cur]);
      wsum += d.wind[cur];
      int at = d.crossingOf(d.mate[cur]);
      int nxt = -1;
      for (int cand : ed[at])
        if (!usedDarts.count(cand) && cand != d.mate[cur]) { nxt = cand; break; }
      if (nxt < 0) break; // cycle closed
      cur = nxt;
    } while (true);
    blockWind[bi] = std::abs(wsum);
    if (blockWind[bi] > 1)
      throw PreconditionError("leafChain: embedded block cycle winds twice");
  }

  // block tree: connect blocks sharing a crossing
  std::vector<std::vector<std::pair<int, int>>> adj(nb); // (other block, crossing)
  for (int c : d.aliveList()) {
    int b0 = bd.blocksOfVertex[c][0], b1 = bd.blocksOfVertex[c][1];
    adj[b0].push_back({b1, c});
    adj[b1].push_back({b0, c});
  }

  // prune contractible pendant blocks repeatedly
  std::vector<char> dead(nb, 0);
  std::vector<int> degree(nb);
  for (int i = 0; i < nb; i++) degree[i] = (int)adj[i].size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < nb; i++) {
      if (dead[i] || blockWind[i] != 0) continue;
      int deg = 0;
      for (auto& [j, c] : adj[i])
        if (!dead[j]) deg++;
      if (deg <= 1) {
        dead[i] = 1;
        changed = true;
      }
    }
  }

  // remaining structure must be a path whose endpoints are essential blocks
  std::vector<int> liveBlocks;
  for (int i = 0; i < nb; i++)
    if (!dead[i]) liveBlocks.push_back(i);
  int essential = 0;
  for (int i : liveBlocks)
    if (blockWind[i] == 1) essential++;
  if (essential == 0)
    throw PreconditionError("leafChain: no essential circle after pruning");
  int ends = 0, startBlock = -1;
  for (int i : liveBlocks) {
    int deg = 0;
    for (auto& [j, c] : adj[i])
      if (!dead[j]) deg++;
    if (deg > 2) throw PreconditionError("leafChain: leaf structure branches");
    if (deg <= 1) {
      ends++;
      if (startBlock < 0) startBlock = i;
    }
  }
  if (liveBlocks.size() == 1) {
    if (blockWind[liveBlocks[0]] != 1)
      throw PreconditionError("leafChain: single block is not essential");
    return {1, {}};
  }
  if (ends != 2) throw PreconditionError("leafChain: leaf structure is not a path");

  // walk the path accumulating signed joint twists between essential blocks
  LeafChain chain;
  std::vector<int> tauAcc;
  int prev = -1, cur = startBlock;
  int sinceEssential = 0;
  bool seenEssential = false;
  if (blockWind[startBlock] != 1)
    throw PreconditionError("leafChain: path endpoint is contractible");
  while (cur >= 0) {
    if (blockWind[cur] == 1) {
      if (seenEssential) tauAcc.push_back(sinceEssential);
      sinceEssential = 0;
      seenEssential = true;
      chain.windings++;
    }
    int nxt = -1;
    for (auto& [j, c] : adj[cur])
      if (!dead[j] && j != prev) {
        nxt = j;
        sinceEssential += crossingSign(d, o, c);
        break;
      }
    prev = cur;
    cur = nxt;
  }
  if (blockWind[prev] != 1)
    throw PreconditionError("leafChain: path endpoint is contractible");
  if (chain.windings % 2 != 1)
    throw PreconditionError("leafChain: even number of essential circles");
  chain.taus = tauAcc;
  return chain;
}

LinkDiagram doubledCoverDiagram(const LinkDiagram& leaf) {
  LeafChain chain = leafChain(leaf);
  if (chain.windings == 1) {
    LinkDiagram d;
    d.freeCircleWind.push_back(0);
    return d; // unknot
  }
  // rational-knot diagram of the boundary of a linear chain of bands with
  // tau[i] full twists: 4-plat with alternating twist regions
  std::vector<BraidLetter> word;
  for (size_t i = 0; i < chain.taus.size(); i++) {
    int tau = chain.taus[i];
    if (tau == 0)
      throw PreconditionError("doubledCoverDiagram: untwisted band in leaf chain");
    int gen = (i % 2 == 0) ? 2 : 1;
    int sgn = (tau > 0) ? 1 : -1;
    for (int k = 0; k < 2 * std::abs(tau); k++) word.push_back({gen, sgn});
  }
  // an odd chain length gives an even number of twist regions, ending in a
  // side region; the crossed bottom caps keep that last region essential
  return platDiagram(word, true);
}

} // namespace braidcover
