#pragma once

#include "kw/planar_map.hpp"
#include "kw/walk.hpp"

namespace kw {

// Word -> site-percolated near-triangulation, built step by step.
// Throws NotInKbar (position = first c-step without any match).
PercolatedMap encode_incremental(const Word& w);

// Same map assembled the other way: the brick chain is laid out first and
// all side gluings dictated by the matching are performed at the end.
// Canonically equal to encode_incremental on all of Kbar.
PercolatedMap encode_bricks(const Word& w);

// Sphere variant: encode_incremental minus the top edge. Requires a
// non-empty word of K ending at the origin; throws NotInK00 otherwise.
// The result has topEdge = -1 and no inactive edges.
PercolatedMap encode_sphere(const Word& w);

// Re-insert the top edge parallel to the root edge of a sphere
// triangulation, recovering the near-triangulation form. NotEncodable.
PercolatedMap sphere_augment(const PercolatedMap& m);

// Boundary-k variant for quadrant walks ending at (0,-k); throws
// NotDiskWord for anything else.
PercolatedMap encode_disk(const Word& w);

// Treatment record of a space-filling exploration of the dual map:
// every edge exactly once, in treatment order. entered[i] is a half-edge
// whose left face is the triangle entered when treating edges[i] (that is,
// the dual edge is a tree edge into an unvisited inner face), or -1.
struct ExplorationLog {
  std::vector<int32_t> edges;
  std::vector<int32_t> entered;
};

// Inverse of encode_incremental given a treatment log for m.
// Letter rule per treated in-edge: no triangle entered -> c; otherwise
// a or b depending on which of the two remaining sides of the entered
// triangle is treated first. Throws NotEncodable.
Word decode(const PercolatedMap& m, const ExplorationLog& log);

// Past/future decomposition of a sphere word at a split position.
struct FuturePastSplit {
  Word word;
  int32_t splitIndex = 0;                   // |u|, the past prefix length
  PercolatedMap pastMap;                    // encode of the prefix
  std::vector<PercolatedMap> futurePieces;  // one per maximal suffix piece
  std::vector<Letter> separatorTypes;       // k-1 entries, Letter::A or B
  std::vector<int32_t> separatorSteps;      // their 1-based positions in w
};

// Splits w = u v at |u| = split; the pieces of v are delimited by the
// c-steps of v whose matches both lie in u. Throws InvalidSplit.
FuturePastSplit future_past(const Word& w, int32_t split);

// Glues the pieces back: separator gluings first (vertex identifications,
// piece colors win in order), then the past map onto the assembled future.
// Canonically equal to encode_incremental(w).
PercolatedMap reassemble(const FuturePastSplit& split);

}  // namespace kw
