#include "braidcover/braid.hpp"
#include <cstdlib>
#include <map>
#include <sstream>

namespace braidcover {

std::string BraidWord::str() const {
  std::ostringstream os;
  os << "b=" << strands << ":";
  // re-merge runs of equal letters for readability
  size_t i = 0;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) j++;
    long e = (long)(j - i) * letters[i].sign;
    os << " s" << letters[i].index;
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

BraidWord parseBraid(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  if (!(is >> tok)) throw ParseError("empty braid word");
  // allow "b=3:" or "b=3 :" or "b=3:s1..."
  std::string head = tok;
  auto colon = head.find(':');
  std::string rest;
  if (colon != std::string::npos) {
    rest = head.substr(colon + 1);
    head = head.substr(0, colon);
  } else {
    std::string c;
    if (!(is >> c) || (c != ":" && c[0] != ':'))
      throw ParseError("expected ':' after strand count");
    if (c.size() > 1) rest = c.substr(1);
  }
  if (head.rfind("b=", 0) != 0) throw ParseError("braid word must start with 'b=<int>:'");
  BraidWord w;
  try {
    size_t pos = 0;
    w.strands = std::stoi(head.substr(2), &pos);
    if (pos != head.size() - 2) throw std::invalid_argument("");
  } catch (...) {
    throw ParseError("invalid strand count in '" + head + "'");
  }
  if (w.strands < 1) throw ParseError("strand count must be positive");

  auto handleToken = [&](const std::string& t) {
    if (t.empty()) return;
    if (t[0] != 's') throw ParseError("bad letter '" + t + "': expected s<idx>[^<int>]");
    size_t caret = t.find('^');
    std::string idxs = t.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    long idx, exp = 1;
    try {
      size_t pos = 0;
      idx = std::stol(idxs, &pos);
      if (pos != idxs.size() || idxs.empty()) throw std::invalid_argument("");
      if (caret != std::string::npos) {
        std::string es = t.substr(caret + 1);
        exp = std::stol(es, &pos);
        if (pos != es.size() || es.empty()) throw std::invalid_argument("");
      }
    } catch (...) {
      throw ParseError("bad letter '" + t + "'");
    }
    if (idx < 1 || idx >= w.strands)
      throw ParseError("generator index out of range in '" + t + "'");
    int sgn = exp >= 0 ? 1 : -1;
    for (long k = 0; k < std::labs(exp); k++)
      w.letters.push_back({(int)idx, sgn});
  };

  handleToken(rest);
  while (is >> tok) handleToken(tok);
  return w;
}

bool isAlternatingAnnular(const BraidWord& w) {
  std::map<int, int> sign; // index -> sign
  for (const auto& l : w.letters) {
    auto it = sign.find(l.index);
    if (it == sign.end())
      sign[l.index] = l.sign;
    else if (it->second != l.sign)
      return false;
  }
  for (auto& [i, s] : sign) {
    auto it = sign.find(i + 1);
    if (it != sign.end() && it->second == s) return false;
  }
  return true;
}

bool isFullyAlternating(const BraidWord& w) {
  if (!isAlternatingAnnular(w)) return false;
  std::vector<bool> seen(w.strands, false);
  for (const auto& l : w.letters) seen[l.index] = true;
  for (int i = 1; i < w.strands; i++)
    if (!seen[i]) return false;
  return true;
}

int writhe(const BraidWord& w) {
  int s = 0;
  for (const auto& l : w.letters) s += l.sign;
  return s;
}

} // namespace braidcover
