#pragma once
#include "ints.hpp"
#include <vector>

namespace braidcover {

// single braid letter: generator index i (1-based, i < strands), sign +-1
struct BraidLetter {
  int index = 0;
  int sign = 1;
  bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
  int strands = 0;
  std::vector<BraidLetter> letters; // exponents expanded to single letters

  std::string str() const;
};

// grammar: "b=<int>: (s<idx>(^<int>)?)*", letters whitespace separated,
// negative exponents allowed, omitted exponent means 1
BraidWord parseBraid(const std::string& text);

// every generator index that occurs does so with a single sign, and
// adjacent indices carry opposite signs
bool isAlternatingAnnular(const BraidWord& w);

// alternating, and every index 1..strands-1 occurs
bool isFullyAlternating(const BraidWord& w);

int writhe(const BraidWord& w);

} // namespace braidcover
