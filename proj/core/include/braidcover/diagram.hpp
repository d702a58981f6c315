#pragma once
#include "braid.hpp"
#include "ints.hpp"
#include "matrix.hpp"
#include <optional>
#include <vector>

namespace braidcover {

// Link diagram as a combinatorial planar map.  Each crossing has four
// darts (ports) numbered 0..3 counterclockwise; for crossings built from a
// braid letter flowing upward: 0=SW, 1=SE, 2=NE, 3=NW.  Strand A occupies
// ports (0,2), strand B ports (1,3).  Diagrams of annular closures carry a
// winding weight per dart: the signed number of times the edge leaving via
// that dart crosses a fixed radial cut of the annulus.
struct LinkDiagram {
  struct Crossing {
    bool alive = true;
    bool aOver = true; // strand A (ports 0,2) passes over strand B (1,3)
  };
  std::vector<Crossing> crossings;
  std::vector<int> mate; // dart -> dart
  std::vector<int> wind; // dart -> winding increment, wind[d] == -wind[mate[d]]
  std::vector<int> freeCircleWind; // crossingless circles, one winding each

  int dart(int c, int p) const { return 4 * c + p; }
  int crossingOf(int d) const { return d / 4; }
  int portOf(int d) const { return d % 4; }
  int aliveCrossings() const;
  std::vector<int> aliveList() const;

  bool isKnotShadowConnected() const; // single piece, counting free circles
  int shadowPieces() const;           // connected components incl. free circles
};

// ---- construction ----

// annular closure of a braid word
LinkDiagram closureDiagram(const BraidWord& w);

// plat closure on 4 strands of a word in generators 1,2,3 (signed exponents
// expanded); caps join strands (1,2) and (3,4) at the top, and either the
// same pairs or the crossed pairs (2,3) and (1,4) at the bottom
LinkDiagram platDiagram(const std::vector<BraidLetter>& word, bool crossedBottom = false);

// ---- resolutions ----

// smoothing r=0 joins ports (0,3) and (1,2) (position-preserving);
// r=1 joins ports (0,1) and (2,3) (cap-cup)
LinkDiagram resolve(const LinkDiagram& d, int crossing, int r);

// ---- orientation / components ----

struct Orientation {
  // per crossing: does strand A flow 0->2, does strand B flow 1->3
  std::vector<char> aForward, bForward;
  int linkComponents = 0;              // curve components incl. free circles
  std::vector<int> componentWinding;   // winding per curve component
};
Orientation orientDiagram(const LinkDiagram& d);

int crossingSign(const LinkDiagram& d, const Orientation& o, int c);

// over/under passes alternate along every component
bool isAlternatingDiagram(const LinkDiagram& d);

// ---- faces and checkerboard forms ----

struct FaceData {
  std::vector<std::vector<int>> faces; // face -> darts
  std::vector<int> faceOf;             // dart -> face
  std::vector<int> color;              // face -> 0/1
  // corner k of crossing c (between ports k and k+1) lies in face
  // faceOf[dart(c, (k+1) % 4)]
};
FaceData faceData(const LinkDiagram& d);

// Goeritz matrix taken over the faces of the given color, one face deleted
IntMatrix goeritzMatrix(const LinkDiagram& d, int blackColor);

// |H_1| of the branched double cover; 0 for split diagrams
Int diagramDeterminant(const LinkDiagram& d);

// Gordon-Litherland signature (single-component diagrams)
int diagramSignature(const LinkDiagram& d);

// signature of a symmetric integer matrix, exact
int symmetricSignature(const IntMatrix& m);

// ---- leaf analysis (twisted unknots) ----

// A leaf of the resolution tree is a connected diagram all of whose
// crossings are cut vertices of the shadow: a tree of embedded circles
// glued at crossings.  After pruning contractible pendants it reduces to a
// radial chain of essential circles; tau[i] is the total signed twisting of
// the joint between circles i and i+1.
struct LeafChain {
  int windings = 0;       // number of essential circles, odd
  std::vector<int> taus;  // signed twist counts, size windings-1
};
LeafChain leafChain(const LinkDiagram& d);

// diagram of the lift of the braid axis in the branched double cover over a
// twisted-unknot leaf: a rational-knot diagram built from the leaf chain
LinkDiagram doubledCoverDiagram(const LinkDiagram& leaf);

} // namespace braidcover
