#pragma once
#include "braid.hpp"
#include "groupring.hpp"
#include "laurent.hpp"
#include <map>
#include <string>
#include <vector>

namespace braidcover {

// ---- rank table from the refined torsion (per Spin^c structure) ----

struct HFKTable {
  int genus = 0;
  struct Column {
    std::vector<Int> s;        // Spin^c label in invariant-factor coordinates
    std::map<int, Int> rankByJ; // Alexander filtration j -> rank; Z/2 grading = j mod 2
  };
  std::vector<Column> columns; // sorted by s lexicographically
};

// rank_{s,j} = |coeff of T^j in p_s|; hard-fails if the (-1)^j sign pattern
// is violated or a coefficient lies beyond |j| <= genus
HFKTable hfkFromTorsion(const GroupRing& ring, const GroupRingElem& tor, int genus);

// ---- torsion coefficients of page-framed surgery ----

struct TorsionCoeffs {
  int genus = 0;
  std::map<int, Int> a; // symmetric Alexander coefficients a_j
  std::vector<Int> t;   // t_s = sum_{j>=1} j*a_{s+j}, for s = 0..genus
  std::vector<Int> b;   // b_s = (-1)^{s+1} t_s, for s = 1..genus (index s-1)
};
TorsionCoeffs torsionCoeffs(const LaurentPoly& delta);

// ---- staircase braids (positive words in disjoint consecutive runs) ----

struct StaircaseWord {
  int start = 0;          // i_j
  int halfLength = 0;     // k_j, run covers indices start..start+2k_j-1
  std::vector<int> exps;  // n_{i_j+l} >= 1, size 2k_j
};

struct StaircaseForm {
  int strands = 0;
  std::vector<StaircaseWord> words;
  int g = 0;            // (strands-1)/2
  int m = 0;            // g - sum k_j
  int s = 0;            // word count
  std::vector<Int> T;   // T_j = sum_l (n_l * n_{l+1} - 1)
  Int sumT = 0;
};

// throws PreconditionError if the word is not in staircase form
StaircaseForm staircaseParse(const BraidWord& w);

struct StaircaseHFK {
  // HFK at j = g: rank 1 in relative grading m
  // HFK at j = g-1: rank (2m+s) in grading m-1 and rank sumT in grading m
  // HF+ at s_{g-2}: rank sumT+1 in grading m and rank 2m+s-1 in grading m-1
  Int hfkTop = 1;
  Int hfkG1AtM;      // sumT
  Int hfkG1AtM1;     // 2m + s
  Int hfpAtM;        // sumT + 1
  Int hfpAtM1;       // 2m + s - 1
  Int hfpTotal;      // sumT + 2m + s
  int gradingM = 0;  // the relative grading "m"
};
StaircaseHFK staircaseHFK(const StaircaseForm& f);

struct ComplementCohomology {
  Int h0; // 1 + sum T_j
  Int h1; // 2m + s - 1
};
// includes the Euler-characteristic cross-check
// h0 - h1 = 2 - 2g - chi(C), chi(C) = -sum n_l * n_{l+1}
ComplementCohomology complementCohomology(const StaircaseForm& f);

// ---- the HF+ vs H*(F\C) comparison, including the counterexample ----

struct EftekharyReport {
  bool staircase = false;       // input word was already staircase
  bool rewritten = false;       // counterexample pattern, Markov-rewritten
  std::string rewrittenWord;    // the staircase word used for HF+
  StaircaseForm hfpForm;        // form the HF+ side was computed from
  StaircaseForm cohomologyForm; // loop multiset of the original word
  StaircaseHFK hfk;
  ComplementCohomology cohomology;
  bool ranksAgree = false;      // HF+ total == H* total
  std::string message;
};
EftekharyReport eftekharyCheck(const BraidWord& w);

} // namespace braidcover
