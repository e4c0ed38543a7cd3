#include "kw/builder.hpp"

#include <algorithm>
#include <cassert>

namespace kw {

MapBuilder::MapBuilder() {
  // Single root edge, white u0 -> black u1; it is also the top.
  newHalf();  // 0: u0 -> u1, the root side
  newHalf();  // 1: u1 -> u0, the top side
  twin_[0] = 1;
  twin_[1] = 0;
  next_[0] = 0;
  next_[1] = 1;
  rNext_[0] = 1;
  rPrev_[0] = 1;
  rNext_[1] = 0;
  rPrev_[1] = 0;
  tag_[0] = kRoot;
  tag_[1] = kTop;
  act_[0] = 0;
  act_[1] = 1;
  oColor_[0] = 0;
  oColor_[1] = 1;
  recE_.assign(1, -1);  // slot 0 unused; steps are 1-based
  recV_.assign(1, -1);
  recF_.assign(1, -1);
  recLR_.assign(1, -1);
}

int32_t MapBuilder::newHalf() {
  const int32_t h = static_cast<int32_t>(twin_.size());
  twin_.push_back(-1);
  next_.push_back(-1);
  alive_.push_back(1);
  rPrev_.push_back(-1);
  rNext_.push_back(-1);
  tag_.push_back(kTop);
  act_.push_back(0);
  oColor_.push_back(0);
  return h;
}

void MapBuilder::ringInsertAfter(int32_t at, int32_t node) {
  const int32_t after = rNext_[at];
  rNext_[at] = node;
  rPrev_[node] = at;
  rNext_[node] = after;
  rPrev_[after] = node;
}

void MapBuilder::ringRemove(int32_t node) {
  rNext_[rPrev_[node]] = rNext_[node];
  rPrev_[rNext_[node]] = rPrev_[node];
  rPrev_[node] = rNext_[node] = -1;
}

void MapBuilder::stepA() {
  const int32_t he = topHe_, te = twin_[he];
  const int32_t hr = rPrev_[he], hl0 = rNext_[he];
  // left edge (v_l, x): lv from v_l, lx from the new vertex x
  const int32_t lv = newHalf(), lx = newHalf();
  twin_[lv] = lx;
  twin_[lx] = lv;
  // top edge (x, v_r): tv from v_r, tx from x
  const int32_t tv = newHalf(), tx = newHalf();
  twin_[tv] = tx;
  twin_[tx] = tv;

  next_[lv] = hl0;  // = old next(te), the boundary successor of the top
  next_[te] = lv;
  next_[lx] = tx;
  next_[tx] = lx;
  next_[tv] = he;
  next_[twin_[hr]] = tv;

  ringRemove(he);
  ringInsertAfter(hr, tv);
  ringInsertAfter(tv, lx);
  tag_[tv] = kTop;
  act_[tv] = 1;
  oColor_[tv] = oColor_[he];  // v_r, black
  tag_[lx] = kLeft;
  act_[lx] = 1;
  oColor_[lx] = 0;  // new white vertex
  topHe_ = tv;
  ++aL_;

  recE_.push_back(he);
  recV_.push_back(-1);
  recF_.push_back(he);
  recLR_.push_back(lx);
}

void MapBuilder::stepB() {
  const int32_t he = topHe_, te = twin_[he];
  const int32_t hr = rPrev_[he], hl0 = rNext_[he];
  // right edge (x, v_r): rv from v_r, rx from the new vertex x
  const int32_t rv = newHalf(), rx = newHalf();
  twin_[rv] = rx;
  twin_[rx] = rv;
  // top edge (v_l, x): tl from v_l, tx from x
  const int32_t tl = newHalf(), tx = newHalf();
  twin_[tl] = tx;
  twin_[tx] = tl;

  next_[rv] = he;
  next_[twin_[hr]] = rv;
  next_[tx] = rx;
  next_[rx] = tx;
  next_[tl] = hl0;
  next_[te] = tl;

  ringRemove(he);
  ringInsertAfter(hr, rv);
  ringInsertAfter(rv, tx);
  tag_[rv] = kRight;
  act_[rv] = 1;
  oColor_[rv] = oColor_[he];  // v_r, black
  tag_[tx] = kTop;
  act_[tx] = 1;
  oColor_[tx] = 1;  // new black vertex
  topHe_ = tx;
  ++aR_;

  recE_.push_back(he);
  recV_.push_back(-1);
  recF_.push_back(he);
  recLR_.push_back(rx);
}

void MapBuilder::stepCClose(bool typeA) {
  assert(aL_ > 0 && aR_ > 0);
  const int32_t he = topHe_, te = twin_[he];
  const int32_t hl = rNext_[he], hrlast = rPrev_[he];
  assert(tag_[hl] == kLeft && act_[hl]);
  assert(tag_[hrlast] == kRight && act_[hrlast]);

  if (typeA) {
    // fold at the top-left: v_l becomes an inner white vertex,
    // the top edge merges with the first left edge, e_r becomes top
    const int32_t tl = twin_[hl];
    const int32_t hnext = rNext_[hl];
    next_[te] = next_[hl];
    next_[tl] = next_[he];
    next_[twin_[hrlast]] = hnext;
    twin_[te] = tl;
    twin_[tl] = te;
    alive_[he] = alive_[hl] = 0;
    ringRemove(he);
    ringRemove(hl);
    tag_[hrlast] = kTop;
    topHe_ = hrlast;
    innerColor_.emplace_back(te, 0);
    recE_.push_back(te);
    recV_.push_back(te);
  } else {
    // fold at the top-right: v_r becomes an inner black vertex,
    // the top edge merges with the last right edge, e_l becomes top
    const int32_t tr = twin_[hrlast];
    const int32_t hr2 = rPrev_[hrlast];
    next_[tr] = next_[he];
    next_[te] = next_[hrlast];
    next_[twin_[hr2]] = hl;
    twin_[te] = tr;
    twin_[tr] = te;
    alive_[he] = alive_[hrlast] = 0;
    ringRemove(he);
    ringRemove(hrlast);
    tag_[hl] = kTop;
    oColor_[hl] = 1;  // v_l recolored black
    topHe_ = hl;
    innerColor_.emplace_back(tr, 1);
    recE_.push_back(te);
    recV_.push_back(tr);
  }
  recF_.push_back(-1);
  recLR_.push_back(-1);
  --aL_;
  --aR_;
}

void MapBuilder::stepCFree(bool typeA) {
  const int32_t he = topHe_;
  if (typeA) {
    // no active left: v_r recolored white, the top edge becomes an
    // inactive left edge, e_r becomes top
    assert(aL_ == 0 && aR_ > 0);
    const int32_t hrlast = rPrev_[he];
    assert(tag_[hrlast] == kRight && act_[hrlast]);
    tag_[he] = kLeft;
    act_[he] = 0;
    oColor_[he] = 0;  // v_r recolored white
    tag_[hrlast] = kTop;
    topHe_ = hrlast;
    recV_.push_back(twin_[he]);  // v_l, a white outer in-vertex
    --aR_;
  } else {
    // no active right: v_l recolored black, the top edge becomes an
    // inactive right edge, e_l becomes top
    assert(aR_ == 0 && aL_ > 0);
    const int32_t hl = rNext_[he];
    assert(tag_[hl] == kLeft && act_[hl]);
    tag_[he] = kRight;
    act_[he] = 0;
    tag_[hl] = kTop;
    oColor_[hl] = 1;  // v_l recolored black
    topHe_ = hl;
    recV_.push_back(he);  // v_r, a black outer in-vertex
    --aL_;
  }
  recE_.push_back(he);
  recF_.push_back(-1);
  recLR_.push_back(-1);
}

PercolatedMap MapBuilder::finish() const {
  const int32_t nAll = static_cast<int32_t>(twin_.size());
  std::vector<int32_t> id(nAll, -1);
  int32_t nLive = 0;
  for (int32_t h = 0; h < nAll; ++h) {
    if (!alive_[h] || id[h] >= 0) continue;
    id[h] = nLive++;
    id[twin_[h]] = nLive++;
  }
  PercolatedMap pm;
  HalfEdgeMap& m = pm.map;
  m.next.assign(nLive, -1);
  m.vertex.assign(nLive, -1);
  std::vector<int32_t> old(nLive, -1);
  for (int32_t h = 0; h < nAll; ++h)
    if (alive_[h]) {
      m.next[id[h]] = id[next_[h]];
      old[id[h]] = h;
    }
  m.root = id[0];
  m.nVertices = 0;
  for (int32_t h2 = 0; h2 < nLive; ++h2) {
    if (m.vertex[h2] >= 0) continue;
    const int32_t v = m.nVertices++;
    int32_t g = h2;
    do {
      m.vertex[g] = v;
      g = m.next[g];
    } while (g != h2);
  }
  pm.color.assign(m.nVertices, 255);
  // boundary vertex colors from the ring, inner ones from the fold records
  {
    int32_t node = 0;  // the root node never leaves the ring
    do {
      pm.color[m.vertex[id[node]]] = oColor_[node];
      node = rNext_[node];
    } while (node != 0);
  }
  for (const auto& [h, c] : innerColor_) pm.color[m.vertex[id[h]]] = c;
  for (uint8_t c : pm.color)
    if (c == 255) throw Error(Errc::InvalidMap, "uncolored vertex after build");
  pm.topEdge = id[topHe_] / 2;
  {
    // an edge is inactive when no boundary node of it is active
    std::vector<int32_t> stateOf;  // edge -> 0 unseen, 1 inactive, 2 active
    stateOf.assign(nLive / 2, 0);
    int32_t node = 0;
    do {
      int32_t& s = stateOf[id[node] / 2];
      s = std::max(s, act_[node] ? int32_t{2} : int32_t{1});
      node = rNext_[node];
    } while (node != 0);
    for (int32_t e = 0; e < nLive / 2; ++e)
      if (stateOf[e] == 1) pm.inactiveEdges.push_back(e);
    std::sort(pm.inactiveEdges.begin(), pm.inactiveEdges.end());
  }
  const size_t nRec = recE_.size();
  pm.etaE.assign(nRec, -1);
  pm.etaV.assign(nRec, -1);
  pm.etaF.assign(nRec, -1);
  pm.etaLR.assign(nRec, -1);
  for (size_t i = 1; i < nRec; ++i) {
    pm.etaE[i] = id[recE_[i]] / 2;
    if (recV_[i] >= 0) pm.etaV[i] = m.vertex[id[recV_[i]]];
    if (recF_[i] >= 0) pm.etaF[i] = id[recF_[i]];
    if (recLR_[i] >= 0 && alive_[recLR_[i]]) pm.etaLR[i] = id[recLR_[i]] / 2;
  }
  return pm;
}

}  // namespace kw
