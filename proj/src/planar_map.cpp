#include "kw/planar_map.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "json.hpp"

namespace kw {

FaceIndex faces(const HalfEdgeMap& m) {
  FaceIndex fi;
  const int32_t n = m.nHalfEdges();
  fi.faceOf.assign(n, -1);
  for (int32_t h = 0; h < n; ++h) {
    if (fi.faceOf[h] >= 0) continue;
    const int32_t f = fi.count();
    fi.rep.push_back(h);
    fi.degree.push_back(0);
    int32_t g = h;
    do {
      fi.faceOf[g] = f;
      ++fi.degree[f];
      g = m.faceNext(g);
    } while (g != h);
  }
  if (n > 0) fi.outer = fi.faceOf[m.root];
  return fi;
}

std::vector<std::string> validateStructure(const HalfEdgeMap& m) {
  std::vector<std::string> out;
  const int32_t n = m.nHalfEdges();
  if (n == 0 || (n & 1)) {
    out.push_back("half-edge count must be positive and even");
    return out;
  }
  if (static_cast<int32_t>(m.vertex.size()) != n) {
    out.push_back("vertex array size differs from half-edge count");
    return out;
  }
  if (m.root < 0 || m.root >= n) {
    out.push_back("root half-edge out of range");
    return out;
  }
  std::vector<uint8_t> seen(n, 0);
  for (int32_t h = 0; h < n; ++h) {
    if (m.next[h] < 0 || m.next[h] >= n) {
      out.push_back("next out of range at half-edge " + std::to_string(h));
      return out;
    }
    if (seen[m.next[h]]++) {
      out.push_back("next is not a permutation");
      return out;
    }
  }
  for (int32_t h = 0; h < n; ++h) {
    if (m.vertex[h] < 0 || m.vertex[h] >= m.nVertices)
      out.push_back("vertex id out of range at half-edge " + std::to_string(h));
    else if (m.vertex[m.next[h]] != m.vertex[h])
      out.push_back("next leaves the origin vertex at half-edge " + std::to_string(h));
  }
  if (!out.empty()) return out;
  std::vector<uint8_t> vseen(m.nVertices, 0);
  for (int32_t h = 0; h < n; ++h) vseen[m.vertex[h]] = 1;
  for (int32_t v = 0; v < m.nVertices; ++v)
    if (!vseen[v]) out.push_back("isolated vertex " + std::to_string(v));
  std::vector<uint8_t> reach(n, 0);
  std::queue<int32_t> q;
  reach[m.root] = 1;
  q.push(m.root);
  int32_t nReach = 1;
  while (!q.empty()) {
    const int32_t h = q.front();
    q.pop();
    for (int32_t g : {m.next[h], HalfEdgeMap::twin(h)})
      if (!reach[g]) {
        reach[g] = 1;
        ++nReach;
        q.push(g);
      }
  }
  if (nReach != n) out.push_back("map is not connected");
  return out;
}

std::vector<std::string> validate(const PercolatedMap& pm) {
  std::vector<std::string> out = validateStructure(pm.map);
  if (!out.empty()) return out;
  const HalfEdgeMap& m = pm.map;
  const int32_t n = m.nHalfEdges();
  if (static_cast<int32_t>(pm.color.size()) != m.nVertices) {
    out.push_back("color array size differs from vertex count");
    return out;
  }
  for (uint8_t c : pm.color)
    if (c > 1) {
      out.push_back("vertex color out of range");
      return out;
    }

  // topEdge < 0 marks the closed form: no boundary, every face a triangle.
  const bool closed = pm.topEdge < 0;
  const FaceIndex fi = faces(m);
  const int64_t euler = int64_t{m.nVertices} - m.nEdges() + fi.count();
  if (euler != 2)
    out.push_back("Euler characteristic is " + std::to_string(euler) + ", expected 2");
  for (int32_t f = 0; f < fi.count(); ++f)
    if ((closed || f != fi.outer) && fi.degree[f] != 3)
      out.push_back("face " + std::to_string(f) + " has degree " +
                    std::to_string(fi.degree[f]));

  for (int32_t e = 0; e < m.nEdges(); ++e)
    if (m.vertex[2 * e] == m.vertex[2 * e + 1])
      out.push_back("loop edge " + std::to_string(e));

  // Boundary walk: root-face orbit, face on the left.
  std::vector<int32_t> boundary;
  {
    int32_t h = m.root;
    do {
      boundary.push_back(h);
      h = m.faceNext(h);
    } while (h != m.root);
  }
  std::vector<uint8_t> onBoundary(m.nVertices, 0);
  bool simple = true;
  for (int32_t h : boundary) {
    if (onBoundary[m.vertex[h]]) simple = false;
    onBoundary[m.vertex[h]] = 1;
  }
  if (!simple) out.push_back("root face boundary is not simple");

  std::vector<uint8_t> isOuterEdge(m.nEdges(), 0);
  for (int32_t h : boundary) isOuterEdge[HalfEdgeMap::edgeOf(h)] = 1;

  // Root interface: the root half-edge runs white -> black along the
  // boundary orbit and no other boundary edge does; the single
  // black -> white edge is the top.
  const int32_t rootEdge = HalfEdgeMap::edgeOf(m.root);
  if (pm.color[m.vertex[m.root]] != 0 || pm.color[m.vertex[HalfEdgeMap::twin(m.root)]] != 1) {
    out.push_back("root edge is not oriented white to black");
  } else if (!closed) {
    int32_t topSeen = -1;
    for (int32_t h : boundary) {
      const uint8_t cu = pm.color[m.vertex[h]];
      const uint8_t cv = pm.color[m.vertex[HalfEdgeMap::twin(h)]];
      if (h != m.root && cu == 0 && cv == 1 && HalfEdgeMap::edgeOf(h) != rootEdge)
        out.push_back("boundary edge " + std::to_string(HalfEdgeMap::edgeOf(h)) +
                      " also runs white to black");
      if (cu == 1 && cv == 0) topSeen = HalfEdgeMap::edgeOf(h);
    }
    if (topSeen < 0)
      out.push_back("no black to white boundary edge for the top");
    else if (topSeen != pm.topEdge)
      out.push_back("top edge is " + std::to_string(topSeen) + ", recorded " +
                    std::to_string(pm.topEdge));
  }

  if (closed && !pm.inactiveEdges.empty())
    out.push_back("closed map carries inactive edges");
  for (int32_t e : pm.inactiveEdges) {
    if (e < 0 || e >= m.nEdges() || !isOuterEdge[e])
      out.push_back("inactive edge " + std::to_string(e) + " is not a boundary edge");
    else if (e == pm.topEdge)
      out.push_back("top edge marked inactive");
  }
  if (!std::is_sorted(pm.inactiveEdges.begin(), pm.inactiveEdges.end()))
    out.push_back("inactive edge list not sorted");
  return out;
}

HalfEdgeMap dual(const HalfEdgeMap& m) {
  if (!validateStructure(m).empty()) throw Error(Errc::InvalidMap, "dual of invalid map");
  const FaceIndex fi = faces(m);
  HalfEdgeMap d;
  const int32_t n = m.nHalfEdges();
  d.next.resize(n);
  d.vertex.resize(n);
  for (int32_t h = 0; h < n; ++h) {
    d.next[h] = m.faceNext(h);
    d.vertex[h] = fi.faceOf[h];
  }
  d.root = HalfEdgeMap::twin(m.root);
  d.nVertices = fi.count();
  return d;
}

namespace {

struct BicolorInfo {
  std::vector<uint8_t> bicolor;           // per edge
  std::vector<std::array<int32_t, 2>> cross;  // per face: its bicolor halves or -1
  std::vector<int32_t> crossCount;            // per face
};

BicolorInfo bicolorInfo(const PercolatedMap& pm, const FaceIndex& fi) {
  const HalfEdgeMap& m = pm.map;
  BicolorInfo bi;
  bi.bicolor.assign(m.nEdges(), 0);
  for (int32_t e = 0; e < m.nEdges(); ++e)
    bi.bicolor[e] = pm.color[m.vertex[2 * e]] != pm.color[m.vertex[2 * e + 1]];
  bi.cross.assign(fi.count(), {-1, -1});
  bi.crossCount.assign(fi.count(), 0);
  for (int32_t h = 0; h < m.nHalfEdges(); ++h) {
    if (!bi.bicolor[HalfEdgeMap::edgeOf(h)]) continue;
    const int32_t f = fi.faceOf[h];
    if (f == fi.outer) continue;
    if (bi.crossCount[f] < 2) bi.cross[f][bi.crossCount[f]] = h;
    ++bi.crossCount[f];
  }
  return bi;
}

}  // namespace

InterfaceSet interfaces(const PercolatedMap& pm) {
  const HalfEdgeMap& m = pm.map;
  const FaceIndex fi = faces(m);
  const BicolorInfo bi = bicolorInfo(pm, fi);
  for (int32_t f = 0; f < fi.count(); ++f)
    if (f != fi.outer && bi.crossCount[f] != 0 && bi.crossCount[f] != 2)
      throw Error(Errc::InvalidMap, "inner triangle with odd bicolor boundary");

  InterfaceSet out;
  std::vector<uint8_t> visited(fi.count(), 0);

  // Path: enter at the root edge, leave each triangle by its other
  // bicolor edge, stop when the outer face is reached.
  out.path.push_back(HalfEdgeMap::edgeOf(m.root));
  int32_t h = HalfEdgeMap::twin(m.root);  // half-edge on the inner side
  while (fi.faceOf[h] != fi.outer) {
    const int32_t f = fi.faceOf[h];
    if (bi.crossCount[f] != 2 || visited[f])
      throw Error(Errc::InvalidMap, "percolation path is not well formed");
    visited[f] = 1;
    const int32_t e0 = bi.cross[f][0];
    const int32_t e1 = bi.cross[f][1];
    const int32_t exit = HalfEdgeMap::edgeOf(e0) == HalfEdgeMap::edgeOf(h) ? e1 : e0;
    out.path.push_back(HalfEdgeMap::edgeOf(exit));
    h = HalfEdgeMap::twin(exit);
  }
  if (out.path.back() != pm.topEdge && !(out.path.size() == 1 && pm.topEdge == out.path[0]))
    throw Error(Errc::InvalidMap, "percolation path does not end at the top edge");

  for (int32_t f0 = 0; f0 < fi.count(); ++f0) {
    if (f0 == fi.outer || visited[f0] || bi.crossCount[f0] != 2) continue;
    std::vector<int32_t> cyc;
    const int32_t eA = HalfEdgeMap::edgeOf(bi.cross[f0][0]);
    const int32_t eB = HalfEdgeMap::edgeOf(bi.cross[f0][1]);
    const int32_t entry = std::min(eA, eB);
    int32_t f = f0;
    int32_t in = entry;
    do {
      if (f == fi.outer || bi.crossCount[f] != 2 || visited[f])
        throw Error(Errc::InvalidMap, "percolation cycle is not well formed");
      visited[f] = 1;
      const int32_t h0 = bi.cross[f][0];
      const int32_t h1 = bi.cross[f][1];
      const int32_t exit = HalfEdgeMap::edgeOf(h0) == in ? h1 : h0;
      cyc.push_back(HalfEdgeMap::edgeOf(exit));
      in = HalfEdgeMap::edgeOf(exit);
      f = fi.faceOf[HalfEdgeMap::twin(exit)];
    } while (f != f0);
    out.cycles.push_back(std::move(cyc));
    out.lengths.push_back(static_cast<int32_t>(out.cycles.back().size()));
  }
  return out;
}

ClusterSet clusters(const PercolatedMap& pm) {
  const HalfEdgeMap& m = pm.map;
  ClusterSet cs;
  cs.compOf.assign(m.nVertices, -1);
  std::vector<int32_t> headAt(m.nVertices, -1);
  for (int32_t h = 0; h < m.nHalfEdges(); ++h) headAt[m.vertex[h]] = h;
  auto forEachNeighbor = [&](int32_t v, auto&& fn) {
    const int32_t h0 = headAt[v];
    int32_t h = h0;
    do {
      fn(h);
      h = m.next[h];
    } while (h != h0);
  };
  for (int32_t v0 = 0; v0 < m.nVertices; ++v0) {
    if (cs.compOf[v0] >= 0) continue;
    const int32_t c = cs.count();
    cs.color.push_back(pm.color[v0]);
    cs.size.push_back(0);
    std::queue<int32_t> q;
    cs.compOf[v0] = c;
    q.push(v0);
    while (!q.empty()) {
      const int32_t v = q.front();
      q.pop();
      ++cs.size[c];
      forEachNeighbor(v, [&](int32_t h) {
        const int32_t u = m.vertex[HalfEdgeMap::twin(h)];
        if (pm.color[u] == pm.color[v] && cs.compOf[u] < 0) {
          cs.compOf[u] = c;
          q.push(u);
        }
      });
    }
  }
  return cs;
}

std::vector<uint8_t> insideFaces(const PercolatedMap& pm, const std::vector<int32_t>& cycle) {
  const HalfEdgeMap& m = pm.map;
  const FaceIndex fi = faces(m);
  std::vector<uint8_t> removed(m.nEdges(), 0);
  for (int32_t e : cycle) {
    if (e < 0 || e >= m.nEdges()) throw Error(Errc::InvalidMap, "cycle edge out of range");
    removed[e] = 1;
  }
  std::vector<uint8_t> visited(fi.count(), 0);
  std::queue<int32_t> q;
  visited[fi.outer] = 1;
  q.push(fi.outer);
  while (!q.empty()) {
    const int32_t f = q.front();
    q.pop();
    int32_t h = fi.rep[f];
    do {
      if (!removed[HalfEdgeMap::edgeOf(h)]) {
        const int32_t g = fi.faceOf[HalfEdgeMap::twin(h)];
        if (!visited[g]) {
          visited[g] = 1;
          q.push(g);
        }
      }
      h = m.faceNext(h);
    } while (h != fi.rep[f]);
  }
  std::vector<uint8_t> inside(fi.count(), 0);
  for (int32_t f = 0; f < fi.count(); ++f) inside[f] = !visited[f];
  return inside;
}

std::vector<uint8_t> insideVertices(const PercolatedMap& pm, const std::vector<int32_t>& cycle) {
  const HalfEdgeMap& m = pm.map;
  const FaceIndex fi = faces(m);
  const std::vector<uint8_t> inF = insideFaces(pm, cycle);
  std::vector<uint8_t> removed(m.nEdges(), 0);
  for (int32_t e : cycle) removed[e] = 1;
  // Per face: its removed halves (a crossed triangle has exactly two, and
  // their shared vertex sits on the opposite side of the chord).
  std::vector<std::array<int32_t, 2>> cut(fi.count(), {-1, -1});
  std::vector<int32_t> cutN(fi.count(), 0);
  for (int32_t h = 0; h < m.nHalfEdges(); ++h) {
    if (!removed[HalfEdgeMap::edgeOf(h)]) continue;
    const int32_t f = fi.faceOf[h];
    if (cutN[f] < 2) cut[f][cutN[f]] = h;
    ++cutN[f];
  }
  std::vector<int8_t> side(m.nVertices, -1);
  for (int32_t h = 0; h < m.nHalfEdges(); ++h) {
    const int32_t v = m.vertex[h];
    const int32_t f = fi.faceOf[h];
    int8_t s;
    if (cutN[f] == 0) {
      s = static_cast<int8_t>(inF[f]);
    } else if (cutN[f] == 2) {
      const int32_t a = cut[f][0];
      const int32_t b = cut[f][1];
      // apex = vertex common to the two crossed edges of f
      int32_t apex = -1;
      for (int32_t x : {a, HalfEdgeMap::twin(a)})
        for (int32_t y : {b, HalfEdgeMap::twin(b)})
          if (m.vertex[x] == m.vertex[y]) apex = m.vertex[x];
      if (apex < 0) throw Error(Errc::InvalidMap, "crossed face without apex");
      s = (v == apex) ? static_cast<int8_t>(!inF[f]) : static_cast<int8_t>(inF[f]);
    } else {
      throw Error(Errc::InvalidMap, "face crossed by cycle more than twice");
    }
    if (side[v] < 0)
      side[v] = s;
    else if (side[v] != s)
      throw Error(Errc::InvalidMap, "inconsistent vertex side classification");
  }
  std::vector<uint8_t> out(m.nVertices, 0);
  for (int32_t v = 0; v < m.nVertices; ++v) out[v] = side[v] == 1;
  return out;
}

int64_t cycle_area(const PercolatedMap& pm, const std::vector<int32_t>& cycle) {
  const std::vector<uint8_t> in = insideVertices(pm, cycle);
  int64_t area = 0;
  for (uint8_t b : in) area += b;
  return area;
}

HalfEdgeMap canonicalize(const HalfEdgeMap& m) {
  const int32_t n = m.nHalfEdges();
  std::vector<int32_t> hid(n, -1);
  int32_t edges = 0;
  auto assign = [&](int32_t h) {
    if (hid[h] >= 0) return;
    if (hid[h ^ 1] >= 0)
      hid[h] = hid[h ^ 1] ^ 1;
    else
      hid[h] = 2 * edges++;
  };
  std::vector<uint8_t> vis(n, 0);
  std::queue<int32_t> q;
  assign(m.root);
  vis[m.root] = 1;
  q.push(m.root);
  int32_t nVis = 1;
  while (!q.empty()) {
    const int32_t h = q.front();
    q.pop();
    for (int32_t g : {m.next[h], HalfEdgeMap::twin(h)})
      if (!vis[g]) {
        vis[g] = 1;
        ++nVis;
        assign(g);
        q.push(g);
      }
  }
  if (nVis != n) throw Error(Errc::InvalidMap, "canonicalize on a disconnected map");
  std::vector<int32_t> old(n);
  for (int32_t h = 0; h < n; ++h) old[hid[h]] = h;
  HalfEdgeMap c;
  c.next.resize(n);
  c.vertex.assign(n, -1);
  c.root = hid[m.root];
  c.nVertices = 0;
  std::vector<int32_t> vmap(m.nVertices, -1);
  for (int32_t h2 = 0; h2 < n; ++h2) {
    const int32_t h = old[h2];
    c.next[h2] = hid[m.next[h]];
    int32_t& v2 = vmap[m.vertex[h]];
    if (v2 < 0) v2 = c.nVertices++;
    c.vertex[h2] = v2;
  }
  return c;
}

PercolatedMap canonicalize(const PercolatedMap& pm) {
  const HalfEdgeMap& m = pm.map;
  const int32_t n = m.nHalfEdges();
  // Recompute the permutation (same traversal as the map overload).
  std::vector<int32_t> hid(n, -1);
  int32_t edges = 0;
  auto assign = [&](int32_t h) {
    if (hid[h] >= 0) return;
    if (hid[h ^ 1] >= 0)
      hid[h] = hid[h ^ 1] ^ 1;
    else
      hid[h] = 2 * edges++;
  };
  std::vector<uint8_t> vis(n, 0);
  std::queue<int32_t> q;
  assign(m.root);
  vis[m.root] = 1;
  q.push(m.root);
  int32_t nVis = 1;
  while (!q.empty()) {
    const int32_t h = q.front();
    q.pop();
    for (int32_t g : {m.next[h], HalfEdgeMap::twin(h)})
      if (!vis[g]) {
        vis[g] = 1;
        ++nVis;
        assign(g);
        q.push(g);
      }
  }
  if (nVis != n) throw Error(Errc::InvalidMap, "canonicalize on a disconnected map");
  std::vector<int32_t> old(n);
  for (int32_t h = 0; h < n; ++h) old[hid[h]] = h;

  PercolatedMap c;
  c.map.next.resize(n);
  c.map.vertex.assign(n, -1);
  c.map.root = hid[m.root];
  c.map.nVertices = 0;
  std::vector<int32_t> vmap(m.nVertices, -1);
  for (int32_t h2 = 0; h2 < n; ++h2) {
    const int32_t h = old[h2];
    c.map.next[h2] = hid[m.next[h]];
    int32_t& v2 = vmap[m.vertex[h]];
    if (v2 < 0) v2 = c.map.nVertices++;
    c.map.vertex[h2] = v2;
  }
  c.color.assign(c.map.nVertices, 0);
  for (int32_t v = 0; v < m.nVertices; ++v)
    if (vmap[v] >= 0) c.color[vmap[v]] = pm.color[v];
  c.inactiveEdges.reserve(pm.inactiveEdges.size());
  for (int32_t e : pm.inactiveEdges) c.inactiveEdges.push_back(hid[2 * e] >> 1);
  std::sort(c.inactiveEdges.begin(), c.inactiveEdges.end());
  c.topEdge = pm.topEdge < 0 ? -1 : hid[2 * pm.topEdge] >> 1;
  auto mapEdges = [&](const std::vector<int32_t>& src, std::vector<int32_t>& dst) {
    dst.resize(src.size());
    for (size_t i = 0; i < src.size(); ++i) dst[i] = src[i] < 0 ? -1 : (hid[2 * src[i]] >> 1);
  };
  mapEdges(pm.etaE, c.etaE);
  mapEdges(pm.etaLR, c.etaLR);
  c.etaV.resize(pm.etaV.size());
  for (size_t i = 0; i < pm.etaV.size(); ++i)
    c.etaV[i] = pm.etaV[i] < 0 ? -1 : vmap[pm.etaV[i]];
  c.etaF.resize(pm.etaF.size());
  for (size_t i = 0; i < pm.etaF.size(); ++i)
    c.etaF[i] = pm.etaF[i] < 0 ? -1 : hid[pm.etaF[i]];
  return c;
}

bool percolatedEqual(const PercolatedMap& x, const PercolatedMap& y) {
  if (x.map.nHalfEdges() != y.map.nHalfEdges()) return false;
  const PercolatedMap a = canonicalize(x);
  const PercolatedMap b = canonicalize(y);
  return a.map == b.map && a.color == b.color && a.inactiveEdges == b.inactiveEdges &&
         a.topEdge == b.topEdge;
}

std::string toJson(const PercolatedMap& m) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["n_half_edges"] = m.map.nHalfEdges();
  j["next"] = m.map.next;
  j["vertex"] = m.map.vertex;
  j["root"] = m.map.root;
  j["colors"] = m.color;
  j["inactive_edges"] = m.inactiveEdges;
  j["top_edge"] = m.topEdge;
  return j.dump();
}

PercolatedMap fromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::IoError, std::string("bad JSON: ") + e.what());
  }
  PercolatedMap m;
  try {
    if (j.at("format_version").get<int>() != 1)
      throw Error(Errc::InvalidMap, "unsupported format_version");
    const int32_t n = j.at("n_half_edges").get<int32_t>();
    m.map.next = j.at("next").get<std::vector<int32_t>>();
    m.map.vertex = j.at("vertex").get<std::vector<int32_t>>();
    m.map.root = j.at("root").get<int32_t>();
    m.color = j.at("colors").get<std::vector<uint8_t>>();
    m.inactiveEdges = j.at("inactive_edges").get<std::vector<int32_t>>();
    m.topEdge = j.at("top_edge").get<int32_t>();
    if (n != static_cast<int32_t>(m.map.next.size()))
      throw Error(Errc::InvalidMap, "n_half_edges disagrees with next array");
    m.map.nVertices = static_cast<int32_t>(m.color.size());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidMap, std::string("bad map JSON: ") + e.what());
  }
  const auto diag = validateStructure(m.map);
  if (!diag.empty()) throw Error(Errc::InvalidMap, diag.front());
  return m;
}

}  // namespace kw
