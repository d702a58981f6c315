#pragma once
#include <braidcover/braid.hpp>
#include <braidcover/laurent.hpp>
#include <algorithm>
#include <random>
#include <string>

inline braidcover::LaurentPoly poly(std::initializer_list<std::pair<int, int>> terms) {
  braidcover::LaurentPoly p;
  for (auto& [e, c] : terms)
    if (c != 0) p.c[e] = c;
  return p;
}

// random fully alternating braid word: per index 1..b-1 a fixed sign with
// adjacent indices opposite, each index used at least once
inline braidcover::BraidWord randomFullyAlternating(std::mt19937& rng, int b,
                                                    int extraLetters) {
  braidcover::BraidWord w;
  w.strands = b;
  int base = rng() % 2 ? 1 : -1;
  auto signOf = [&](int i) { return i % 2 ? base : -base; };
  std::vector<int> idx;
  for (int i = 1; i < b; i++) idx.push_back(i);
  for (int k = 0; k < extraLetters; k++) idx.push_back(1 + (int)(rng() % (b - 1)));
  std::shuffle(idx.begin(), idx.end(), rng);
  for (int i : idx) w.letters.push_back({i, signOf(i)});
  return w;
}
