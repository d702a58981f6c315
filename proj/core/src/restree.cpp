#include "braidcover/restree.hpp"
#include <json.hpp>
#include <algorithm>
#include <sstream>

namespace braidcover {

IntMatrix chainSeifertMatrix(const std::vector<int>& taus) {
  int n = (int)taus.size();
  IntMatrix v(n, n);
  for (int i = 0; i < n; i++) {
    v.at(i, i) = taus[i];
    if (i + 1 < n) v.at(i, i + 1) = 1;
  }
  return v;
}

LeafInvariants leafInvariantsFromChain(const LeafChain& chain) {
  LeafInvariants inv;
  if (chain.windings == 1) {
    inv.det = 1;
    inv.alex = LaurentPoly(Int(1));
    inv.signature = 0;
    return inv;
  }
  IntMatrix v = chainSeifertMatrix(chain.taus);
  int n = v.rows;
  // Alexander polynomial det(V - t V^T), symmetrized
  LaurentPoly t = LaurentPoly::monomial(Int(1), 1);
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      m[i][j] = LaurentPoly(v.at(i, j)) - t * LaurentPoly(v.at(j, i));
  LaurentPoly det = polyDeterminant(m);
  if (det.isZero() || det.evalAtOne() == 0)
    throw PreconditionError("leaf invariants: degenerate Seifert form");
  inv.alex = normalizeSymmetric(det);
  inv.det = absInt(inv.alex.evalAtMinusOne());
  // symmetrized Seifert form V + V^T
  IntMatrix sym(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) sym.at(i, j) = v.at(i, j) + v.at(j, i);
  inv.signature = symmetricSignature(sym);
  return inv;
}

namespace {

ResolutionNode buildNode(LinkDiagram d, std::vector<int> states, int scanFrom,
                         const TreeOptions& opt, int& nextId) {
  ResolutionNode node;
  node.id = nextId++;
  int branchAt = -1;
  LinkDiagram d0, d1;
  for (int c = scanFrom; c < (int)d.crossings.size(); c++) {
    if (!d.crossings[c].alive) continue;
    LinkDiagram r0 = resolve(d, c, 0);
    if (!r0.isKnotShadowConnected()) continue;
    LinkDiagram r1 = resolve(d, c, 1);
    if (!r1.isKnotShadowConnected()) continue;
    branchAt = c;
    d0 = std::move(r0);
    d1 = std::move(r1);
    break;
  }
  if (branchAt < 0) {
    if (opt.leafInvariants) node.leaf = leafInvariantsFromChain(leafChain(d));
    node.diagram = std::move(d);
    node.crossingStates = std::move(states);
    return node;
  }
  node.branchedCrossing = branchAt;
  std::vector<int> s0 = states, s1 = states;
  s0[branchAt] = 0;
  s1[branchAt] = 1;
  node.children.push_back(
      buildNode(std::move(d0), std::move(s0), branchAt + 1, opt, nextId));
  node.children.push_back(
      buildNode(std::move(d1), std::move(s1), branchAt + 1, opt, nextId));
  node.diagram = std::move(d);
  node.crossingStates = std::move(states);
  return node;
}

} // namespace

ResolutionNode wehrliTree(const LinkDiagram& d, const TreeOptions& opt) {
  if (!d.isKnotShadowConnected())
    throw PreconditionError("wehrli tree: diagram not connected");
  if (d.aliveCrossings() > opt.maxCrossings)
    throw CapExceededError("wehrli tree: crossing count exceeds cap");
  int nextId = 0;
  return buildNode(d, std::vector<int>(d.crossings.size(), -1), 0, opt, nextId);
}

int leafCount(const ResolutionNode& root) {
  if (root.isLeaf()) return 1;
  int n = 0;
  for (const auto& ch : root.children) n += leafCount(ch);
  return n;
}

namespace {

void collectLeaves(const ResolutionNode& n, std::vector<const ResolutionNode*>& out) {
  if (n.isLeaf()) {
    out.push_back(&n);
    return;
  }
  for (const auto& ch : n.children) collectLeaves(ch, out);
}

} // namespace

std::vector<CensusEntry> leafCensus(const ResolutionNode& root) {
  std::vector<const ResolutionNode*> leaves;
  collectLeaves(root, leaves);
  std::vector<LeafInvariants> invs;
  for (const auto* l : leaves) {
    if (!l->leaf)
      throw PreconditionError("leaf census: tree built without leaf invariants");
    invs.push_back(*l->leaf);
  }
  std::sort(invs.begin(), invs.end());
  std::vector<CensusEntry> census;
  for (const auto& inv : invs) {
    if (!census.empty() && census.back().inv == inv)
      census.back().count++;
    else
      census.push_back({inv, 1});
  }
  return census;
}

namespace {

std::string statesString(const ResolutionNode& n) {
  std::string s;
  for (int st : n.crossingStates) s += (st < 0 ? '*' : char('0' + st));
  return s;
}

nlohmann::ordered_json nodeToJson(const ResolutionNode& n) {
  nlohmann::ordered_json j;
  j["id"] = n.id;
  j["states"] = statesString(n);
  if (n.branchedCrossing >= 0) j["branched_crossing"] = n.branchedCrossing;
  if (n.leaf) {
    j["leaf"] = {{"det", n.leaf->det.str()},
                 {"alexander", n.leaf->alex.str()},
                 {"signature", n.leaf->signature}};
  }
  if (!n.children.empty()) {
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& ch : n.children) j["children"].push_back(nodeToJson(ch));
  }
  return j;
}

void nodeToDot(const ResolutionNode& n, std::ostringstream& out) {
  std::string label = statesString(n);
  if (n.leaf)
    label += "\\ndet=" + n.leaf->det.str() + " sig=" +
             std::to_string(n.leaf->signature);
  out << "  n" << n.id << " [label=\"" << label << "\"";
  if (n.isLeaf()) out << ", shape=box";
  out << "];\n";
  for (size_t i = 0; i < n.children.size(); i++) {
    out << "  n" << n.id << " -> n" << n.children[i].id << " [label=\"" << i
        << "\"];\n";
    nodeToDot(n.children[i], out);
  }
}

} // namespace

std::string treeToJson(const ResolutionNode& root) {
  return nodeToJson(root).dump(2);
}

std::string treeToDot(const ResolutionNode& root) {
  std::ostringstream out;
  out << "digraph restree {\n";
  nodeToDot(root, out);
  out << "}\n";
  return out.str();
}

namespace {

bool windingOdd(const LinkDiagram& d) {
  Orientation o = orientDiagram(d);
  int parity = 0;
  for (int w : o.componentWinding) parity ^= (w & 1);
  return parity == 1;
}

bool qprimeRec(const LinkDiagram& d, QPrimeNode& node) {
  if (!d.isKnotShadowConnected()) return false;
  node.det = diagramDeterminant(d);
  if (node.det <= 0) return false;
  // base case: alternating twisted unknot
  if (isAlternatingDiagram(d)) {
    try {
      leafChain(d);
      node.leaf = true;
      return true;
    } catch (const PreconditionError&) {
      // not a twisted unknot; fall through to resolution search
    }
  }
  for (int c : d.aliveList()) {
    LinkDiagram d0 = resolve(d, c, 0);
    if (!d0.isKnotShadowConnected()) continue;
    LinkDiagram d1 = resolve(d, c, 1);
    if (!d1.isKnotShadowConnected()) continue;
    Int det0 = diagramDeterminant(d0);
    Int det1 = diagramDeterminant(d1);
    if (det0 <= 0 || det1 <= 0 || det0 + det1 != node.det) continue;
    QPrimeNode c0, c1;
    if (!qprimeRec(d0, c0)) continue;
    if (!qprimeRec(d1, c1)) continue;
    node.branchedCrossing = c;
    node.children = {std::move(c0), std::move(c1)};
    return true;
  }
  return false;
}

} // namespace

QPrimeResult isQuasiAlternatingAnnular(const LinkDiagram& d, int maxCrossings) {
  if (d.aliveCrossings() > maxCrossings)
    throw CapExceededError("qprime: crossing count exceeds cap");
  QPrimeResult res;
  if (!windingOdd(d)) return res;
  res.member = qprimeRec(d, res.certificate);
  return res;
}

} // namespace braidcover
