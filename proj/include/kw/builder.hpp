#pragma once

#include <cstdint>
#include <vector>

#include "kw/planar_map.hpp"

namespace kw {

// Incremental triangle-gluing construction. Maintains the boundary of the
// growing map as a doubly-linked ring of outer half-edges tagged
// root/right/top/left, in the root-face orbit order
// [root, inactive rights, active rights, top, active lefts, inactive lefts].
//
// All operations are O(1); vertex ids, colors and the step tables are
// resolved once in finish().
class MapBuilder {
 public:
  MapBuilder();

  void stepA();                 // glue a triangle on the top edge, new white vertex
  void stepB();                 // mirror, new black vertex
  void stepCClose(bool typeA);  // c with both matches; typeA folds at the top-left
  void stepCFree(bool typeA);   // c with one match; typeA = no active left side

  int32_t activeLefts() const { return aL_; }
  int32_t activeRights() const { return aR_; }
  int32_t steps() const { return static_cast<int32_t>(recE_.size()) - 1; }

  PercolatedMap finish() const;

 private:
  enum Tag : uint8_t { kRoot, kRight, kTop, kLeft };

  int32_t newHalf();
  void ringInsertAfter(int32_t at, int32_t node);
  void ringRemove(int32_t node);

  std::vector<int32_t> twin_, next_;
  std::vector<uint8_t> alive_;
  std::vector<int32_t> rPrev_, rNext_;  // boundary ring, keyed by outer half-edge
  std::vector<uint8_t> tag_, act_, oColor_;
  int32_t topHe_ = 1;
  int32_t aL_ = 0, aR_ = 0;
  std::vector<std::pair<int32_t, uint8_t>> innerColor_;  // (half at vertex, color)
  // per-step records by half-edge; resolved to ids in finish()
  std::vector<int32_t> recE_, recV_, recF_, recLR_;
};

}  // namespace kw
