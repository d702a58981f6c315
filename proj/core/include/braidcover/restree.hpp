#pragma once
#include "diagram.hpp"
#include "laurent.hpp"
#include <optional>
#include <string>

namespace braidcover {

// invariants of the lifted-axis knot over a twisted-unknot leaf
struct LeafInvariants {
  Int det;
  LaurentPoly alex; // symmetric, alex(1) = 1
  int signature = 0;

  bool operator==(const LeafInvariants&) const = default;
  bool operator<(const LeafInvariants& o) const {
    if (det != o.det) return det < o.det;
    if (alex.c != o.alex.c) return alex.c < o.alex.c;
    return signature < o.signature;
  }
};

// Seifert matrix of the chain plumbing of bands with the given full twists:
// diagonal tau[i], superdiagonal 1
IntMatrix chainSeifertMatrix(const std::vector<int>& taus);

// invariants of the boundary of that plumbing (= the leaf's doubled cover)
LeafInvariants leafInvariantsFromChain(const LeafChain& chain);

struct ResolutionNode {
  LinkDiagram diagram;
  std::vector<int> crossingStates; // -1 unresolved, 0 or 1 once resolved
  int id = 0;
  int branchedCrossing = -1; // -1 at leaves
  std::vector<ResolutionNode> children;
  std::optional<LeafInvariants> leaf;

  bool isLeaf() const { return children.empty(); }
};

struct TreeOptions {
  int maxCrossings = 24;
  bool leafInvariants = true;
};

// Wehrli's resolution tree: scan crossings in letter order from the current
// index; branch at the first crossing both of whose resolutions keep the
// shadow connected; otherwise the node is a leaf (a twisted unknot).
ResolutionNode wehrliTree(const LinkDiagram& d, const TreeOptions& opt = {});

int leafCount(const ResolutionNode& root);

struct CensusEntry {
  LeafInvariants inv;
  int count = 0;
};
// aggregated leaf invariants, sorted by (det, alex, signature)
std::vector<CensusEntry> leafCensus(const ResolutionNode& root);

std::string treeToJson(const ResolutionNode& root);
std::string treeToDot(const ResolutionNode& root);

// quasi-alternating certification in the annular class Q'
struct QPrimeNode {
  Int det;
  bool leaf = false;         // alternating twisted unknot
  int branchedCrossing = -1;
  std::vector<QPrimeNode> children;
};
struct QPrimeResult {
  bool member = false;
  QPrimeNode certificate; // valid only when member
};
QPrimeResult isQuasiAlternatingAnnular(const LinkDiagram& d, int maxCrossings = 24);

} // namespace braidcover
