#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kw/error.hpp"

namespace kw {

enum class Letter : uint8_t { A = 0, B = 1, C = 2 };

char letterChar(Letter s);

using Word = std::vector<Letter>;

// Throws Error(InvalidSymbol, pos) on any character outside {a,b,c}.
Word parse(std::string_view text);
std::string toString(const Word& w);

// Endpoint of the lattice walk with steps a=(1,0), b=(0,1), c=(-1,-1).
std::pair<long long, long long> endpoint(const Word& w);

enum class CKind : uint8_t {
  NotC = 0,
  MatchedTypeA,    // both matches, a-match earlier
  MatchedTypeB,    // both matches, b-match earlier
  UnmatchedTypeA,  // no a-match
  UnmatchedTypeB,  // no b-match
  Orphan,          // no match at all (word outside Kbar)
};

// Indices are 1-based throughout; 0 means "none". Arrays have size n+1.
struct MatchTable {
  int32_t n = 0;
  std::vector<int32_t> aMatch;  // c-step k -> matching a-step
  std::vector<int32_t> bMatch;  // c-step k -> matching b-step
  std::vector<int32_t> cMatch;  // a/b-step i -> matching c-step
  std::vector<CKind> kind;
  // Closing c-step of the innermost same-letter matching strictly enclosing
  // the a-matching (resp. b-matching) ending at c-step k; 0 = none.
  std::vector<int32_t> parentA;
  std::vector<int32_t> parentB;
  bool inK = true;     // every c-step has both matches
  bool inKbar = true;  // every c-step has at least one match
  bool inKsuf = true;  // inKbar and every a/b-step is matched
  bool endsAtOrigin = false;

  // Later (or unique) match of c-step k; 0 if k has no match.
  int32_t closeMatch(int32_t k) const;
  // Earlier match of c-step k when both exist; 0 otherwise.
  int32_t farMatch(int32_t k) const;
};

MatchTable matchings(const Word& w);

// White = a-step or type-a c-step; black = b-step or type-b c-step.
// i may also address the augmented top steps n+1 (white) and n+2 (black).
bool stepIsWhite(const Word& w, const MatchTable& m, int32_t i);

struct ConeExcursion {
  int32_t from = 0;    // the close-matched a/b-step
  int32_t to = 0;      // its c-step
  int32_t height = 0;  // coordinate drop, >= 1
};

// Cone excursion starting at step j. Throws Error(NotCloseMatched) unless
// w[j] is a close-matched a/b-step.
ConeExcursion cone_excursion(const Word& w, const MatchTable& m, int32_t j);

struct ReducedStep {
  int32_t time = 0;   // index of the spine step in w
  Letter axis{};      // A: moves along x, B: moves along y
  int32_t drop = 0;   // 0 => unit step +1 on its axis; k>=1 => step -k
};

struct SpineDecomposition {
  std::vector<int32_t> spineTimes;
  std::vector<ReducedStep> reducedWord;
  std::vector<int32_t> leftCode;   // x-projection, padded: valid ccw loop code
  std::vector<int32_t> rightCode;  // y-projection, padded: valid cw loop code
  Word shuffle;                    // one a/b letter per reduced step
};

// Throws Error(NotInKbar) if some c-step has no match.
SpineDecomposition spine(const Word& w, const MatchTable& m);

std::string reducedToString(const std::vector<ReducedStep>& r);

// Parent maps on the augmented word w+"ab". Step addressing: 1..n are the
// steps of w, n+1 the appended a-step ("top-a"), n+2 the appended b-step
// ("top-b"). Domain: unmatched a/b-steps and c-steps of w.
struct ParentTable {
  int32_t n = 0;
  std::vector<uint8_t> inDomain;  // size n+3
  std::vector<int32_t> p;         // size n+3, 0 outside the domain
  std::vector<int32_t> pvec;      // size n+3, 0 outside the domain
  int32_t topA() const { return n + 1; }
  int32_t topB() const { return n + 2; }
};

ParentTable parentTable(const Word& w, const MatchTable& m);  // NotInKbar

int32_t parent_p(const Word& w, const MatchTable& m, int32_t i);     // NotInVertexSet
int32_t parent_pvec(const Word& w, const MatchTable& m, int32_t i);  // NotInVertexSet

struct EnvelopeRecord {
  int32_t from = 0;     // far-matched a/b-step
  int32_t to = 0;       // envelope c-step = closing time
  int32_t parent = -1;  // position of the innermost enclosing record, -1 if none
};

// All envelope excursions in increasing closing time. Throws NotInKbar.
std::vector<EnvelopeRecord> envelope_excursions(const Word& w, const MatchTable& m);

// c-steps where both coordinates hit simultaneous new strict minima.
std::vector<int32_t> cut_times(const Word& w);
// Positions t such that the suffix w_t..w_n stays in the quadrant.
std::vector<int32_t> split_times(const Word& w);

bool isSphereWord(const Word& w, const MatchTable& m);
// Disk words: inKsuf, endpoint (0,-h) with h>=0, and the walk stays in
// {x>=0, y>=-h}. When true, *hOut receives h.
bool isDiskWord(const Word& w, const MatchTable& m, int32_t* hOut = nullptr);

}  // namespace kw
