#include "kw/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kw/builder.hpp"
#include "kw/error.hpp"

namespace kw {

namespace {

size_t firstOrphan(const MatchTable& mt) {
  for (int32_t k = 1; k <= mt.n; ++k)
    if (mt.kind[k] == CKind::Orphan) return static_cast<size_t>(k);
  return 0;
}

PercolatedMap buildIncremental(const Word& w, const MatchTable& mt) {
  MapBuilder b;
  for (int32_t k = 1; k <= static_cast<int32_t>(w.size()); ++k) {
    switch (w[k - 1]) {
      case Letter::A: b.stepA(); break;
      case Letter::B: b.stepB(); break;
      case Letter::C:
        switch (mt.kind[k]) {
          case CKind::MatchedTypeA: b.stepCClose(true); break;
          case CKind::MatchedTypeB: b.stepCClose(false); break;
          case CKind::UnmatchedTypeA: b.stepCFree(true); break;
          case CKind::UnmatchedTypeB: b.stepCFree(false); break;
          default: assert(false);
        }
        break;
    }
  }
  return b.finish();
}

// Half-edge arena for the batch assembly paths (brick chains, future/past
// regluing). The boundary ring doubles as the outer face orbit:
// next_[twin_[h]] == rNext_[h] for every ring half, and every operation
// below preserves that. Vertices are implicit (next_-orbits); each half
// carries a (priority, color) stamp for its origin vertex, and the final
// color of a vertex is the stamp of the highest-priority half in its orbit,
// which makes later recolorings win over earlier ones without tracking
// vertex identity through the gluings.
struct Surgeon {
  std::vector<int32_t> twin_, next_, rPrev_, rNext_, stampPrio_;
  std::vector<uint8_t> stampColor_, alive_, act_;
  int32_t topHalf_ = -1;

  struct Import {
    int32_t rootHalf = -1;
    int32_t topSide = -1;
    std::vector<int32_t> ring;
  };

  int32_t size() const { return static_cast<int32_t>(next_.size()); }

  int32_t newHalf(int32_t prio, uint8_t color) {
    twin_.push_back(-1);
    next_.push_back(-1);
    rPrev_.push_back(-1);
    rNext_.push_back(-1);
    stampPrio_.push_back(prio);
    stampColor_.push_back(color);
    alive_.push_back(1);
    act_.push_back(0);
    return size() - 1;
  }

  std::pair<int32_t, int32_t> newEdge(int32_t prio, uint8_t cA, uint8_t cB) {
    const int32_t h = newHalf(prio, cA);
    const int32_t t = newHalf(prio, cB);
    twin_[h] = t;
    twin_[t] = h;
    return {h, t};
  }

  void ringLink(int32_t a, int32_t b) {
    rNext_[a] = b;
    rPrev_[b] = a;
  }

  void seed() {
    const auto [h0, h1] = newEdge(0, 0, 1);
    next_[h0] = h0;
    next_[h1] = h1;
    ringLink(h0, h1);
    ringLink(h1, h0);
    act_[h0] = 0;
    act_[h1] = 1;
    topHalf_ = h1;
  }

  // a-step: triangle on the old top edge; returns the open left side.
  int32_t appendTa(int32_t k) {
    const int32_t he = topHalf_, te = twin_[he], hr = rPrev_[he];
    const int32_t after = rNext_[he];
    const auto [lv, lx] = newEdge(k, 0, 0);  // v_l -> x, x -> v_l
    const auto [tv, tx] = newEdge(k, 1, 0);  // v_r -> x, x -> v_r
    const int32_t oldTeNext = next_[te];
    next_[lv] = oldTeNext;
    next_[te] = lv;
    next_[lx] = tx;
    next_[tx] = lx;
    next_[tv] = he;
    next_[twin_[hr]] = tv;
    ringLink(hr, tv);
    ringLink(tv, lx);
    ringLink(lx, after);
    rPrev_[he] = rNext_[he] = -1;
    act_[tv] = 1;
    act_[lx] = 1;
    topHalf_ = tv;
    return lx;
  }

  // b-step mirror; returns the open right side.
  int32_t appendTb(int32_t k) {
    const int32_t he = topHalf_, te = twin_[he], hr = rPrev_[he];
    const int32_t after = rNext_[he];
    const auto [rv, rx] = newEdge(k, 1, 1);  // v_r -> x, x -> v_r
    const auto [tl, tx] = newEdge(k, 0, 1);  // v_l -> x, x -> v_l
    const int32_t oldTeNext = next_[te];
    next_[tl] = oldTeNext;
    next_[te] = tl;
    next_[rx] = tx;
    next_[tx] = rx;
    next_[rv] = he;
    next_[twin_[hr]] = rv;
    ringLink(hr, rv);
    ringLink(rv, tx);
    ringLink(tx, after);
    rPrev_[he] = rNext_[he] = -1;
    act_[rv] = 1;
    act_[tx] = 1;
    topHalf_ = tx;
    return rv;
  }

  // Type-a c step: the old top edge turns into the closing left side and a
  // fresh pendant edge carries the new top; v_r is recolored white.
  // Returns {closing left, closing right}.
  std::pair<int32_t, int32_t> appendTaTilde(int32_t k) {
    const int32_t he = topHalf_, te = twin_[he], hr = rPrev_[he];
    const auto [g1, g2] = newEdge(k, 0, 1);  // v_r -> S, S -> v_r
    next_[twin_[hr]] = g1;
    next_[g1] = he;
    next_[g2] = g2;
    ringLink(hr, g1);
    ringLink(g1, g2);
    ringLink(g2, he);  // he keeps its old ring successor
    act_[g1] = 0;
    act_[g2] = 1;
    act_[he] = 0;
    stampPrio_[he] = k;
    stampColor_[he] = 0;
    stampPrio_[te] = k;
    stampColor_[te] = 0;
    topHalf_ = g2;
    return {he, g1};
  }

  // Type-b mirror: old top becomes the closing right side; v_l recolored
  // black (via the new top half's stamp).
  std::pair<int32_t, int32_t> appendTbTilde(int32_t k) {
    const int32_t he = topHalf_, te = twin_[he];
    const int32_t after = rNext_[he];
    const auto [g1, g2] = newEdge(k, 1, 0);  // v_l -> S, S -> v_l
    const int32_t oldTeNext = next_[te];
    next_[g1] = oldTeNext;
    next_[te] = g1;
    next_[g2] = g2;
    ringLink(he, g1);
    ringLink(g1, g2);
    ringLink(g2, after);
    act_[he] = 0;
    act_[g1] = 1;
    act_[g2] = 0;
    stampPrio_[he] = k;
    stampColor_[he] = 1;
    topHalf_ = g1;
    return {g2, he};
  }

  // Glues the boundary edge at ring node a onto the next one along the
  // ring, merging a's origin with that edge's far endpoint.
  void zip(int32_t a) {
    const int32_t b = rNext_[a];
    assert(a >= 0 && b >= 0 && alive_[a] && alive_[b]);
    const int32_t tA = twin_[a], tB = twin_[b];
    assert(tA != b);  // never fold an edge onto itself
    const int32_t p = rPrev_[a], s = rNext_[b];
    assert(p != b && s != a);  // ring keeps a bystander
    assert(next_[tA] == b);    // ring == outer face at the corner
    const int32_t ocrA = next_[a], ocrB = next_[b];
    assert(ocrB != a && ocrA != b);  // no loop edges
    next_[tA] = ocrB;
    if (ocrA != a) {  // a's origin keeps other halves
      next_[tB] = ocrA;
      next_[twin_[p]] = s;
    }
    twin_[tA] = tB;
    twin_[tB] = tA;
    alive_[a] = alive_[b] = 0;
    ringLink(p, s);
    rPrev_[a] = rNext_[a] = rPrev_[b] = rNext_[b] = -1;
  }

  // Identifies the outer-corner vertex between i_x and o_x with the one
  // between i_y and o_y, joining their boundary rings.
  void spliceCorners(int32_t ix, int32_t ox, int32_t iy, int32_t oy) {
    assert(alive_[ix] && alive_[ox] && alive_[iy] && alive_[oy]);
    assert(rNext_[ix] == ox && rNext_[iy] == oy);
    assert(next_[twin_[ix]] == ox && next_[twin_[iy]] == oy);
    next_[twin_[ix]] = oy;
    next_[twin_[iy]] = ox;
    ringLink(ix, oy);
    ringLink(iy, ox);
  }

  // Identifies the top edge of the ring containing hT with the root edge
  // of the ring containing hR (the rings must be distinct).
  void fuseRootEdge(int32_t hT, int32_t hR) {
    assert(alive_[hT] && alive_[hR]);
    const int32_t tT = twin_[hT], tR = twin_[hR];
    const int32_t pPrev = rPrev_[hT], pNext = rNext_[hT];
    const int32_t qNext = rNext_[hR], qLast = rPrev_[hR];
    assert(pPrev != hT && qNext != hR && pNext != hR && qNext != hT);
    assert(next_[tT] == pNext && next_[tR] == qNext);
    const int32_t oldNextHT = next_[hT], oldNextHR = next_[hR];
    assert(oldNextHT != hT);
    next_[twin_[pPrev]] = qNext;
    if (oldNextHR != hR) {  // hR's origin keeps other halves
      next_[twin_[qLast]] = pNext;
      next_[tT] = oldNextHR;
    }
    next_[tR] = oldNextHT;
    twin_[tT] = tR;
    twin_[tR] = tT;
    alive_[hT] = alive_[hR] = 0;
    ringLink(pPrev, qNext);
    ringLink(qLast, pNext);
    rPrev_[hT] = rNext_[hT] = rPrev_[hR] = rNext_[hR] = -1;
  }

  Import importMap(const PercolatedMap& pm, int32_t prio) {
    assert(pm.topEdge >= 0);
    const int32_t nH = pm.map.nHalfEdges();
    const int32_t base = size();
    for (int32_t h = 0; h < nH; ++h)
      newHalf(prio, pm.color[pm.map.vertex[h]]);
    for (int32_t h = 0; h < nH; ++h) {
      twin_[base + h] = base + (h ^ 1);
      next_[base + h] = base + pm.map.next[h];
    }
    Import im;
    im.rootHalf = base + pm.map.root;
    int32_t h = pm.map.root;
    do {
      im.ring.push_back(base + h);
      h = pm.map.faceNext(h);
    } while (h != pm.map.root);
    const size_t len = im.ring.size();
    for (size_t i = 0; i < len; ++i) ringLink(im.ring[i], im.ring[(i + 1) % len]);
    for (int32_t node : im.ring) {
      const int32_t e = (node - base) >> 1;
      act_[node] = std::binary_search(pm.inactiveEdges.begin(),
                                      pm.inactiveEdges.end(), e)
                       ? 0
                       : 1;
      if (e == pm.topEdge && node != im.rootHalf) im.topSide = node;
    }
    assert(im.topSide >= 0);
    return im;
  }

  PercolatedMap finish(int32_t rootH, int32_t topH) const {
    const int32_t nH = size();
    std::vector<int32_t> id(nH, -1);
    int32_t compact = 0;
    for (int32_t h = 0; h < nH; ++h) {
      if (!alive_[h] || id[h] >= 0) continue;
      assert(alive_[twin_[h]] && twin_[h] != h);
      id[h] = compact;
      id[twin_[h]] = compact + 1;
      compact += 2;
    }
    PercolatedMap pm;
    pm.map.next.assign(compact, -1);
    pm.map.vertex.assign(compact, -1);
    for (int32_t h = 0; h < nH; ++h) {
      if (!alive_[h]) continue;
      assert(alive_[next_[h]]);
      pm.map.next[id[h]] = id[next_[h]];
    }
    assert(alive_[rootH] && alive_[topH]);
    pm.map.root = id[rootH];
    int32_t nv = 0;
    for (int32_t h = 0; h < compact; ++h) {
      if (pm.map.vertex[h] >= 0) continue;
      const int32_t v = nv++;
      for (int32_t g = h; pm.map.vertex[g] < 0; g = pm.map.next[g])
        pm.map.vertex[g] = v;
    }
    pm.map.nVertices = nv;
    pm.color.assign(nv, 0);
    std::vector<int32_t> best(nv, -1);
    for (int32_t h = 0; h < nH; ++h) {
      if (!alive_[h]) continue;
      const int32_t v = pm.map.vertex[id[h]];
      if (stampPrio_[h] > best[v]) {
        best[v] = stampPrio_[h];
        pm.color[v] = stampColor_[h];
      } else if (stampPrio_[h] == best[v]) {
        assert(pm.color[v] == stampColor_[h]);
      }
    }
    pm.topEdge = id[topH] / 2;
    std::vector<uint8_t> state(compact / 2, 0);
    int32_t h = rootH;
    do {
      assert(alive_[h] && next_[twin_[h]] == rNext_[h]);
      const int32_t e = id[h] / 2;
      state[e] = std::max<uint8_t>(state[e], act_[h] ? 2 : 1);
      h = rNext_[h];
    } while (h != rootH);
    for (int32_t e = 0; e < compact / 2; ++e)
      if (state[e] == 1) pm.inactiveEdges.push_back(e);
    return pm;
  }
};

}  // namespace

PercolatedMap encode_incremental(const Word& w) {
  const MatchTable mt = matchings(w);
  if (!mt.inKbar)
    throw Error(Errc::NotInKbar, "c step has no matching a or b step",
                firstOrphan(mt));
  return buildIncremental(w, mt);
}

PercolatedMap encode_bricks(const Word& w) {
  const MatchTable mt = matchings(w);
  if (!mt.inKbar)
    throw Error(Errc::NotInKbar, "c step has no matching a or b step",
                firstOrphan(mt));
  if (w.empty()) return MapBuilder().finish();
  const int32_t n = static_cast<int32_t>(w.size());
  Surgeon s;
  s.seed();
  std::vector<int32_t> openL(n + 1, -1), openR(n + 1, -1);
  std::vector<int32_t> closeL(n + 1, -1), closeR(n + 1, -1);
  for (int32_t k = 1; k <= n; ++k) {
    switch (w[k - 1]) {
      case Letter::A: openL[k] = s.appendTa(k); break;
      case Letter::B: openR[k] = s.appendTb(k); break;
      case Letter::C: {
        const bool typeA = mt.kind[k] == CKind::MatchedTypeA ||
                           mt.kind[k] == CKind::UnmatchedTypeA;
        const auto [cl, cr] = typeA ? s.appendTaTilde(k) : s.appendTbTilde(k);
        closeL[k] = cl;
        closeR[k] = cr;
        break;
      }
    }
  }
  // All side gluings at once, in step order: nesting keeps each pair of
  // sides adjacent on the ring by the time its turn comes.
  for (int32_t k = 1; k <= n; ++k) {
    if (w[k - 1] != Letter::C) continue;
    if (mt.aMatch[k] > 0) {
      assert(s.rNext_[closeL[k]] == openL[mt.aMatch[k]]);
      s.zip(closeL[k]);
    }
    if (mt.bMatch[k] > 0) {
      assert(s.rNext_[openR[mt.bMatch[k]]] == closeR[k]);
      s.zip(openR[mt.bMatch[k]]);
    }
  }
  return s.finish(0, s.topHalf_);
}

PercolatedMap encode_sphere(const Word& w) {
  const MatchTable mt = matchings(w);
  if (w.empty() || !isSphereWord(w, mt))
    throw Error(Errc::NotInK00,
                "word must stay in the quadrant and end at the origin");
  PercolatedMap pm = buildIncremental(w, mt);
  // The boundary is the two-sided root/top digon; peel off the top edge.
  const int32_t t = pm.topEdge;
  const int32_t hOut = pm.map.faceNext(pm.map.root);
  assert(HalfEdgeMap::edgeOf(hOut) == t && pm.map.faceNext(hOut) == pm.map.root);
  (void)hOut;
  const int32_t ht0 = 2 * t, ht1 = 2 * t + 1;
  for (const int32_t h : {ht0, ht1}) {
    int32_t g = pm.map.next[h];
    while (pm.map.next[g] != h) g = pm.map.next[g];
    assert(g != h);  // both endpoints keep other edges
    pm.map.next[g] = pm.map.next[h];
  }
  const auto newH = [ht1](int32_t h) { return h > ht1 ? h - 2 : h; };
  HalfEdgeMap m2;
  const int32_t nH = pm.map.nHalfEdges();
  m2.next.resize(nH - 2);
  m2.vertex.resize(nH - 2);
  for (int32_t h = 0; h < nH; ++h) {
    if (h == ht0 || h == ht1) continue;
    m2.next[newH(h)] = newH(pm.map.next[h]);
    m2.vertex[newH(h)] = pm.map.vertex[h];
  }
  m2.root = newH(pm.map.root);
  m2.nVertices = pm.map.nVertices;
  pm.map = std::move(m2);
  pm.topEdge = -1;
  pm.inactiveEdges.clear();
  for (auto& e : pm.etaE)
    if (e >= 0) {
      assert(e != t);
      if (e > t) e -= 1;
    }
  for (auto& h : pm.etaF)
    if (h >= 0) {
      assert(h != ht0 && h != ht1);
      if (h > ht1) h -= 2;
    }
  for (auto& e : pm.etaLR)
    if (e >= 0) {
      assert(e != t);
      if (e > t) e -= 1;
    }
  return pm;
}

PercolatedMap sphere_augment(const PercolatedMap& m) {
  if (m.topEdge >= 0)
    throw Error(Errc::NotEncodable, "map already carries a top edge");
  {
    const auto diag = validate(m);
    if (!diag.empty())
      throw Error(Errc::NotEncodable, "invalid map: " + diag.front());
  }
  const int32_t h0 = m.map.root, h1 = HalfEdgeMap::twin(h0);
  if (m.color[m.map.vertex[h0]] != 0 || m.color[m.map.vertex[h1]] != 1)
    throw Error(Errc::NotEncodable, "root edge is not oriented white to black");
  const int32_t g1 = m.map.faceNext(h0);
  const int32_t g2 = m.map.faceNext(g1);
  assert(m.map.faceNext(g2) == h0);
  PercolatedMap out = m;
  const int32_t nH = m.map.nHalfEdges();
  const int32_t tOut = nH, tIn = nH + 1;  // u1 -> u0 outer, u0 -> u1 inner
  out.map.next.resize(nH + 2);
  out.map.vertex.resize(nH + 2);
  out.map.vertex[tOut] = m.map.vertex[h1];
  out.map.vertex[tIn] = m.map.vertex[h0];
  const int32_t oldNextH1 = out.map.next[h1];
  out.map.next[h1] = tOut;
  out.map.next[tOut] = oldNextH1;
  out.map.next[HalfEdgeMap::twin(g2)] = tIn;
  out.map.next[tIn] = h0;
  out.topEdge = nH / 2;
  out.inactiveEdges = {HalfEdgeMap::edgeOf(h0)};
  return out;
}

PercolatedMap encode_disk(const Word& w) {
  const MatchTable mt = matchings(w);
  if (!isDiskWord(w, mt))
    throw Error(Errc::NotDiskWord,
                "word must stay weakly left of the diagonal and end on it");
  return buildIncremental(w, mt);
}

Word decode(const PercolatedMap& m, const ExplorationLog& log) {
  if (m.topEdge < 0)
    throw Error(Errc::NotEncodable,
                "closed map: restore the top edge before decoding");
  {
    const auto diag = validate(m);
    if (!diag.empty())
      throw Error(Errc::NotEncodable, "invalid map: " + diag.front());
  }
  const int32_t nE = m.map.nEdges();
  if (static_cast<int32_t>(log.edges.size()) != nE ||
      log.entered.size() != log.edges.size())
    throw Error(Errc::NotEncodable,
                "treatment log must cover every edge exactly once");
  std::vector<int32_t> rank(nE, -1);
  for (int32_t i = 0; i < nE; ++i) {
    const int32_t e = log.edges[i];
    if (e < 0 || e >= nE || rank[e] >= 0)
      throw Error(Errc::NotEncodable, "treatment log is not a permutation",
                  static_cast<size_t>(i));
    rank[e] = i;
  }
  std::vector<uint8_t> onBoundary(nE, 0);
  {
    int32_t h = m.map.root;
    do {
      onBoundary[HalfEdgeMap::edgeOf(h)] = 1;
      h = m.map.faceNext(h);
    } while (h != m.map.root);
  }
  std::vector<uint8_t> inact(nE, 0);
  for (const int32_t e : m.inactiveEdges) inact[e] = 1;
  // In-edges are everything except the active outer edges; each treated
  // in-edge yields one letter.
  const auto isInEdge = [&](int32_t e) { return !onBoundary[e] || inact[e]; };
  Word w;
  for (int32_t i = 0; i < nE; ++i) {
    const int32_t e = log.edges[i];
    const int32_t ent = log.entered[i];
    if (ent != -1 && (ent < 0 || HalfEdgeMap::edgeOf(ent) != e))
      throw Error(Errc::NotEncodable, "entered half does not lie on its edge",
                  static_cast<size_t>(i));
    if (!isInEdge(e)) continue;
    if (ent == -1) {
      w.push_back(Letter::C);
      continue;
    }
    const int32_t hl = m.map.faceNext(ent);
    const int32_t hr = m.map.faceNext(hl);
    if (m.map.faceNext(hr) != ent)
      throw Error(Errc::NotEncodable, "entered face is not a triangle",
                  static_cast<size_t>(i));
    w.push_back(rank[HalfEdgeMap::edgeOf(hr)] < rank[HalfEdgeMap::edgeOf(hl)]
                    ? Letter::A
                    : Letter::B);
  }
  if (!matchings(w).inKbar)
    throw Error(Errc::NotEncodable, "recovered word has an unmatchable c step");
  return w;
}

FuturePastSplit future_past(const Word& w, int32_t split) {
  const MatchTable mt = matchings(w);
  if (!isSphereWord(w, mt))
    throw Error(Errc::InvalidSplit, "word does not close up into a sphere");
  const int32_t n = static_cast<int32_t>(w.size());
  if (split < 0 || split > n)
    throw Error(Errc::InvalidSplit, "split position out of range",
                static_cast<size_t>(split < 0 ? 0 : split));
  FuturePastSplit r;
  r.word = w;
  r.splitIndex = split;
  const Word u(w.begin(), w.begin() + split);
  const Word v(w.begin() + split, w.end());
  r.pastMap = encode_incremental(u);
  const MatchTable mv = matchings(v);
  std::vector<int32_t> seps;
  for (int32_t j = 1; j <= mv.n; ++j)
    if (mv.kind[j] == CKind::Orphan) seps.push_back(j);
  size_t start = 0;
  for (const int32_t j : seps) {
    const Word piece(v.begin() + start, v.begin() + (j - 1));
    assert(matchings(piece).inKsuf);
    r.futurePieces.push_back(encode_incremental(piece));
    start = static_cast<size_t>(j);
  }
  {
    const Word piece(v.begin() + start, v.end());
    assert(matchings(piece).inKsuf);
    r.futurePieces.push_back(encode_incremental(piece));
  }
  for (const int32_t j : seps) {
    const int32_t absStep = split + j;
    r.separatorSteps.push_back(absStep);
    const CKind k = mt.kind[absStep];
    assert(k == CKind::MatchedTypeA || k == CKind::MatchedTypeB);
    r.separatorTypes.push_back(k == CKind::MatchedTypeA ? Letter::A
                                                        : Letter::B);
  }
  return r;
}

PercolatedMap reassemble(const FuturePastSplit& fp) {
  const int32_t n = static_cast<int32_t>(fp.word.size());
  const int32_t k = static_cast<int32_t>(fp.futurePieces.size());
  if (k == 0 || static_cast<int32_t>(fp.separatorTypes.size()) != k - 1 ||
      fp.splitIndex < 0 || fp.splitIndex > n)
    throw Error(Errc::InvalidSplit, "malformed split record");
  if (fp.splitIndex == n) return fp.pastMap;
  if (fp.splitIndex == 0) {
    if (k != 1) throw Error(Errc::InvalidSplit, "empty past cannot have cuts");
    return fp.futurePieces[0];
  }
  Surgeon s;
  std::vector<Surgeon::Import> q;
  q.reserve(fp.futurePieces.size());
  for (int32_t t = 0; t < k; ++t)
    q.push_back(s.importMap(fp.futurePieces[t], t + 1));
  for (int32_t t = 0; t + 1 < k; ++t) {
    if (fp.separatorTypes[t] == Letter::A) {
      const int32_t ox = q[t].topSide, oy = q[t + 1].rootHalf;
      s.spliceCorners(s.rPrev_[ox], ox, s.rPrev_[oy], oy);
    } else {
      const int32_t ix = q[t].topSide, iy = q[t + 1].rootHalf;
      s.spliceCorners(ix, s.rNext_[ix], iy, s.rNext_[iy]);
    }
  }
  const Surgeon::Import past = s.importMap(fp.pastMap, 0);
  std::vector<int32_t> rights, lefts;
  {
    bool afterTop = false;
    for (size_t i = 1; i < past.ring.size(); ++i) {
      const int32_t node = past.ring[i];
      if (node == past.topSide) {
        afterTop = true;
        continue;
      }
      (afterTop ? lefts : rights).push_back(node);
    }
  }
  s.fuseRootEdge(past.topSide, q[0].rootHalf);
  for (size_t j = rights.size(); j-- > 0;) s.zip(rights[j]);
  for (const int32_t node : lefts) s.zip(s.rPrev_[node]);
  assert(s.rNext_[past.rootHalf] == q[k - 1].topSide &&
         s.rNext_[q[k - 1].topSide] == past.rootHalf);
  return s.finish(past.rootHalf, q[k - 1].topSide);
}

}  // namespace kw
