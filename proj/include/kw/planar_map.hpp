#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kw/error.hpp"

namespace kw {

// Rooted combinatorial planar map. twin(h) = h^1; faces are orbits of
// h -> next[h^1], which walk with the face on the left; the orbit of the
// root half-edge is the root face and reads the boundary in the direction
// root(u0->u1), right edges, top(vr->vl), left edges.
struct HalfEdgeMap {
  std::vector<int32_t> next;    // ccw-next half-edge around the origin vertex
  std::vector<int32_t> vertex;  // origin vertex id of each half-edge
  int32_t root = 0;
  int32_t nVertices = 0;

  int32_t nHalfEdges() const { return static_cast<int32_t>(next.size()); }
  int32_t nEdges() const { return nHalfEdges() / 2; }
  static int32_t twin(int32_t h) { return h ^ 1; }
  static int32_t edgeOf(int32_t h) { return h >> 1; }
  int32_t faceNext(int32_t h) const { return next[h ^ 1]; }

  bool operator==(const HalfEdgeMap&) const = default;
};

struct FaceIndex {
  std::vector<int32_t> faceOf;  // half-edge -> face id
  std::vector<int32_t> rep;     // face id -> first half-edge of its orbit
  std::vector<int32_t> degree;  // face id -> number of edge sides
  int32_t outer = -1;           // face of the root half-edge

  int32_t count() const { return static_cast<int32_t>(rep.size()); }
};

FaceIndex faces(const HalfEdgeMap& m);

struct PercolatedMap {
  HalfEdgeMap map;
  std::vector<uint8_t> color;          // per vertex; 0 = white, 1 = black
  std::vector<int32_t> inactiveEdges;  // sorted outer edge ids
  int32_t topEdge = 0;                 // edge id

  // Step correspondences, 1-based (slot 0 unused); empty when not tracked.
  std::vector<int32_t> etaE;   // step -> edge id
  std::vector<int32_t> etaV;   // c-step -> vertex id, -1 otherwise
  std::vector<int32_t> etaF;   // a/b-step -> half-edge with the triangle on its left
  std::vector<int32_t> etaLR;  // unmatched a/b-step -> edge id, -1 otherwise
};

// Structural equality of the rooted colored marked maps (eta tables ignored).
bool percolatedEqual(const PercolatedMap& x, const PercolatedMap& y);

// Diagnostics; empty iff m is a valid site-percolated near-triangulation
// with simple boundary, no loops, and the root-interface condition.
std::vector<std::string> validate(const PercolatedMap& m);

// Low-level structural check used by deserialization and validate().
std::vector<std::string> validateStructure(const HalfEdgeMap& m);

HalfEdgeMap dual(const HalfEdgeMap& m);  // throws InvalidMap

struct InterfaceSet {
  // Percolation path: bicolor edges crossed in order, root edge first,
  // top edge last. Crosses path.size()-1 triangles.
  std::vector<int32_t> path;
  // Percolation cycles: each is the cyclic list of bicolor edges crossed.
  std::vector<std::vector<int32_t>> cycles;
  // Triangles crossed by each cycle (= its edge count).
  std::vector<int32_t> lengths;
};

InterfaceSet interfaces(const PercolatedMap& m);  // throws InvalidMap

struct ClusterSet {
  std::vector<int32_t> compOf;   // vertex -> cluster id
  std::vector<uint8_t> color;    // cluster id -> color
  std::vector<int32_t> size;     // cluster id -> vertex count
  int32_t count() const { return static_cast<int32_t>(size.size()); }
};

ClusterSet clusters(const PercolatedMap& m);

// Vertices strictly inside the cycle (side without the root face).
int64_t cycle_area(const PercolatedMap& m, const std::vector<int32_t>& cycle);
// Per-face / per-vertex side classification for one cycle: 1 = inside.
std::vector<uint8_t> insideFaces(const PercolatedMap& m, const std::vector<int32_t>& cycle);
std::vector<uint8_t> insideVertices(const PercolatedMap& m, const std::vector<int32_t>& cycle);

HalfEdgeMap canonicalize(const HalfEdgeMap& m);
PercolatedMap canonicalize(const PercolatedMap& m);  // eta tables relabeled along

std::string toJson(const PercolatedMap& m);
PercolatedMap fromJson(const std::string& text);  // throws InvalidMap / IoError

}  // namespace kw
