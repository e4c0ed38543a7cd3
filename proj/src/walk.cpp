#include "kw/walk.hpp"

#include <algorithm>
#include <limits>

namespace kw {

const char* errcName(Errc c) {
  switch (c) {
    case Errc::InvalidSymbol: return "InvalidSymbol";
    case Errc::NotCloseMatched: return "NotCloseMatched";
    case Errc::NotInKbar: return "NotInKbar";
    case Errc::NotInVertexSet: return "NotInVertexSet";
    case Errc::NotQuadrantWord: return "NotQuadrantWord";
    case Errc::NotSphereWord: return "NotSphereWord";
    case Errc::NotInK00: return "NotInK00";
    case Errc::NotDiskWord: return "NotDiskWord";
    case Errc::NotEncodable: return "NotEncodable";
    case Errc::InvalidSplit: return "InvalidSplit";
    case Errc::ArcOutOfRange: return "ArcOutOfRange";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::InvalidAnchor: return "InvalidAnchor";
    case Errc::InvalidMap: return "InvalidMap";
    case Errc::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case Errc::InsufficientSupport: return "InsufficientSupport";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

char letterChar(Letter s) {
  switch (s) {
    case Letter::A: return 'a';
    case Letter::B: return 'b';
    default: return 'c';
  }
}

Word parse(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'a': w.push_back(Letter::A); break;
      case 'b': w.push_back(Letter::B); break;
      case 'c': w.push_back(Letter::C); break;
      default:
        throw Error(Errc::InvalidSymbol,
                    std::string("invalid symbol at position ") + std::to_string(i + 1),
                    i + 1);
    }
  }
  return w;
}

std::string toString(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(letterChar(x));
  return s;
}

std::pair<long long, long long> endpoint(const Word& w) {
  long long x = 0, y = 0;
  for (Letter s : w) {
    if (s == Letter::A) ++x;
    else if (s == Letter::B) ++y;
    else { --x; --y; }
  }
  return {x, y};
}

MatchTable matchings(const Word& w) {
  MatchTable t;
  const int32_t n = static_cast<int32_t>(w.size());
  t.n = n;
  t.aMatch.assign(n + 1, 0);
  t.bMatch.assign(n + 1, 0);
  t.cMatch.assign(n + 1, 0);
  t.kind.assign(n + 1, CKind::NotC);
  t.parentA.assign(n + 1, 0);
  t.parentB.assign(n + 1, 0);

  std::vector<int32_t> aStack, bStack;
  for (int32_t i = 1; i <= n; ++i) {
    switch (w[i - 1]) {
      case Letter::A: aStack.push_back(i); break;
      case Letter::B: bStack.push_back(i); break;
      case Letter::C: {
        if (!aStack.empty()) {
          t.aMatch[i] = aStack.back();
          t.cMatch[aStack.back()] = i;
          aStack.pop_back();
        }
        if (!bStack.empty()) {
          t.bMatch[i] = bStack.back();
          t.cMatch[bStack.back()] = i;
          bStack.pop_back();
        }
        break;
      }
    }
  }
  for (int32_t i = 1; i <= n; ++i) {
    if (w[i - 1] == Letter::C) {
      const int32_t a = t.aMatch[i], b = t.bMatch[i];
      if (a && b) t.kind[i] = a < b ? CKind::MatchedTypeA : CKind::MatchedTypeB;
      else if (b) t.kind[i] = CKind::UnmatchedTypeA;
      else if (a) t.kind[i] = CKind::UnmatchedTypeB;
      else { t.kind[i] = CKind::Orphan; t.inKbar = false; }
      if (!(a && b)) t.inK = false;
    } else if (t.cMatch[i] == 0) {
      t.inKsuf = false;
    }
  }
  t.inKsuf = t.inKsuf && t.inKbar;
  auto [x, y] = endpoint(w);
  t.endsAtOrigin = (x == 0 && y == 0);

  // Second sweep: stacks of matched steps only. When c-step k pops its match,
  // the entry left on top closes the innermost enclosing same-letter matching.
  std::vector<int32_t> ma, mb;
  for (int32_t i = 1; i <= n; ++i) {
    switch (w[i - 1]) {
      case Letter::A: if (t.cMatch[i]) ma.push_back(i); break;
      case Letter::B: if (t.cMatch[i]) mb.push_back(i); break;
      case Letter::C: {
        if (t.aMatch[i]) {
          ma.pop_back();
          if (!ma.empty()) t.parentA[i] = t.cMatch[ma.back()];
        }
        if (t.bMatch[i]) {
          mb.pop_back();
          if (!mb.empty()) t.parentB[i] = t.cMatch[mb.back()];
        }
        break;
      }
    }
  }
  return t;
}

int32_t MatchTable::closeMatch(int32_t k) const {
  const int32_t a = aMatch[k], b = bMatch[k];
  if (a && b) return std::max(a, b);
  return a ? a : b;
}

int32_t MatchTable::farMatch(int32_t k) const {
  const int32_t a = aMatch[k], b = bMatch[k];
  if (a && b) return std::min(a, b);
  return 0;
}

bool stepIsWhite(const Word& w, const MatchTable& m, int32_t i) {
  if (i == m.n + 1) return true;
  if (i == m.n + 2) return false;
  switch (w[i - 1]) {
    case Letter::A: return true;
    case Letter::B: return false;
    default:
      return m.kind[i] == CKind::MatchedTypeA || m.kind[i] == CKind::UnmatchedTypeA;
  }
}

ConeExcursion cone_excursion(const Word& w, const MatchTable& m, int32_t j) {
  if (j < 1 || j > m.n || w[j - 1] == Letter::C || m.cMatch[j] == 0 ||
      m.closeMatch(m.cMatch[j]) != j)
    throw Error(Errc::NotCloseMatched,
                "step " + std::to_string(j) + " is not a close-matched a/b-step", j);
  ConeExcursion e;
  e.from = j;
  e.to = m.cMatch[j];
  int32_t drop = 0;
  if (w[j - 1] == Letter::A) {
    for (int32_t t = j; t <= e.to; ++t) {
      if (w[t - 1] == Letter::B) --drop;
      else if (w[t - 1] == Letter::C) ++drop;
    }
  } else {
    for (int32_t t = j; t <= e.to; ++t) {
      if (w[t - 1] == Letter::A) --drop;
      else if (w[t - 1] == Letter::C) ++drop;
    }
  }
  e.height = drop;
  return e;
}

SpineDecomposition spine(const Word& w, const MatchTable& m) {
  if (!m.inKbar) throw Error(Errc::NotInKbar, "word has a c-step with no match");
  const int32_t n = m.n;
  SpineDecomposition d;

  // depth[i] > 0 iff step i is strictly enclosed by some close-matching
  std::vector<int32_t> depth(n + 2, 0);
  for (int32_t k = 1; k <= n; ++k) {
    if (w[k - 1] != Letter::C) continue;
    const int32_t j = m.closeMatch(k);
    if (j && j + 1 <= k - 1) { ++depth[j + 1]; --depth[k]; }
  }
  for (int32_t i = 1; i <= n; ++i) depth[i] += depth[i - 1];

  int32_t unA = 0, unB = 0, unCa = 0, unCb = 0;
  for (int32_t i = 1; i <= n; ++i) {
    if (w[i - 1] == Letter::C) {
      if (m.kind[i] == CKind::UnmatchedTypeA) ++unCa;
      else if (m.kind[i] == CKind::UnmatchedTypeB) ++unCb;
    } else if (m.cMatch[i] == 0) {
      (w[i - 1] == Letter::A ? unA : unB)++;
    }
  }

  for (int32_t i = 1; i <= n; ++i) {
    if (w[i - 1] == Letter::C || depth[i] != 0) continue;
    d.spineTimes.push_back(i);
    ReducedStep r;
    r.time = i;
    const int32_t k = m.cMatch[i];
    if (k != 0 && m.closeMatch(k) == i) {
      // macro step: the cone excursion collapses onto the opposite axis
      ConeExcursion e = cone_excursion(w, m, i);
      r.axis = (w[i - 1] == Letter::A) ? Letter::B : Letter::A;
      r.drop = e.height;
    } else {
      r.axis = w[i - 1];
      r.drop = 0;
    }
    d.reducedWord.push_back(r);
  }

  d.leftCode.assign(unCa, 1);
  d.rightCode.assign(unCb, 1);
  for (const ReducedStep& r : d.reducedWord) {
    const int32_t v = r.drop == 0 ? 1 : -r.drop;
    if (r.axis == Letter::A) d.leftCode.push_back(v);
    else d.rightCode.push_back(v);
    d.shuffle.push_back(r.axis);
  }
  d.leftCode.push_back(-unA);
  d.rightCode.push_back(-unB);
  return d;
}

std::string reducedToString(const std::vector<ReducedStep>& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s.push_back(' ');
    const char axis = r[i].axis == Letter::A ? 'a' : 'b';
    if (r[i].drop == 0) s.push_back(axis);
    else { s.push_back(axis); s += "bar"; s += std::to_string(r[i].drop); }
  }
  return s;
}

ParentTable parentTable(const Word& w, const MatchTable& m) {
  if (!m.inKbar) throw Error(Errc::NotInKbar, "word has a c-step with no match");
  const int32_t n = m.n;
  ParentTable t;
  t.n = n;
  t.inDomain.assign(n + 3, 0);
  t.p.assign(n + 3, 0);
  t.pvec.assign(n + 3, 0);
  const int32_t topA = n + 1, topB = n + 2;

  // next*[i]: smallest index > i of the given step kind, with the appended
  // top steps acting as final unmatched a/b-steps
  std::vector<int32_t> nextUnA(n + 2), nextUnB(n + 2), nextUnCa(n + 2), nextUnCb(n + 2);
  std::vector<int32_t> nextWhiteTgt(n + 2), nextBlackTgt(n + 2);
  nextUnA[n] = topA; nextUnB[n] = topB;
  nextUnCa[n] = 0; nextUnCb[n] = 0;
  nextWhiteTgt[n] = topA; nextBlackTgt[n] = topB;
  for (int32_t i = n - 1; i >= 0; --i) {
    const int32_t s = i + 1;
    const bool isA = w[s - 1] == Letter::A, isB = w[s - 1] == Letter::B;
    const bool unA = isA && m.cMatch[s] == 0, unB = isB && m.cMatch[s] == 0;
    const bool unCa = m.kind[s] == CKind::UnmatchedTypeA;
    const bool unCb = m.kind[s] == CKind::UnmatchedTypeB;
    nextUnA[i] = unA ? s : nextUnA[s];
    nextUnB[i] = unB ? s : nextUnB[s];
    nextUnCa[i] = unCa ? s : nextUnCa[s];
    nextUnCb[i] = unCb ? s : nextUnCb[s];
    nextWhiteTgt[i] = (unA || unCa) ? s : nextWhiteTgt[s];
    nextBlackTgt[i] = (unB || unCb) ? s : nextBlackTgt[s];
  }

  for (int32_t i = 1; i <= n; ++i) {
    switch (w[i - 1]) {
      case Letter::A:
        if (m.cMatch[i] == 0) { t.inDomain[i] = 1; t.p[i] = nextUnA[i]; }
        break;
      case Letter::B:
        if (m.cMatch[i] == 0) { t.inDomain[i] = 1; t.p[i] = nextUnB[i]; }
        break;
      case Letter::C: {
        t.inDomain[i] = 1;
        switch (m.kind[i]) {
          case CKind::UnmatchedTypeA:
            t.p[i] = nextUnCa[i] ? nextUnCa[i] : nextUnA[0];
            break;
          case CKind::UnmatchedTypeB:
            t.p[i] = nextUnCb[i] ? nextUnCb[i] : nextUnB[0];
            break;
          case CKind::MatchedTypeA:
            t.p[i] = m.parentA[i] ? m.parentA[i] : nextWhiteTgt[i];
            break;
          case CKind::MatchedTypeB:
            t.p[i] = m.parentB[i] ? m.parentB[i] : nextBlackTgt[i];
            break;
          default: break;
        }
        break;
      }
    }
  }

  // pvec[v] = first iterate whose color repeats; chains always terminate at a
  // top step, whose color matches its predecessor's
  std::vector<int32_t> chain;
  for (int32_t i = 1; i <= n; ++i) {
    if (!t.inDomain[i] || t.pvec[i]) continue;
    int32_t v = i;
    chain.clear();
    while (true) {
      const int32_t u = t.p[v];
      if (t.pvec[v]) break;
      if (stepIsWhite(w, m, u) == stepIsWhite(w, m, v)) { t.pvec[v] = u; break; }
      chain.push_back(v);
      v = u;
    }
    const int32_t r = t.pvec[v];
    for (int32_t x : chain) t.pvec[x] = r;
  }
  return t;
}

int32_t parent_p(const Word& w, const MatchTable& m, int32_t i) {
  ParentTable t = parentTable(w, m);
  if (i < 1 || i > m.n || !t.inDomain[i])
    throw Error(Errc::NotInVertexSet,
                "step " + std::to_string(i) + " is not a vertex step", i);
  return t.p[i];
}

int32_t parent_pvec(const Word& w, const MatchTable& m, int32_t i) {
  ParentTable t = parentTable(w, m);
  if (i < 1 || i > m.n || !t.inDomain[i])
    throw Error(Errc::NotInVertexSet,
                "step " + std::to_string(i) + " is not a vertex step", i);
  return t.pvec[i];
}

std::vector<EnvelopeRecord> envelope_excursions(const Word& w, const MatchTable& m) {
  if (!m.inKbar) throw Error(Errc::NotInKbar, "word has a c-step with no match");
  ParentTable t = parentTable(w, m);
  std::vector<EnvelopeRecord> out;
  for (int32_t k = 1; k <= m.n; ++k) {
    if (m.kind[k] != CKind::MatchedTypeA && m.kind[k] != CKind::MatchedTypeB) continue;
    if (stepIsWhite(w, m, t.pvec[k]) == stepIsWhite(w, m, k)) continue;
    EnvelopeRecord r;
    r.from = m.farMatch(k);
    r.to = k;
    out.push_back(r);
  }
  // records are disjoint or nested; nesting parents via interval sweep
  std::vector<int32_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int32_t>(i);
  std::sort(order.begin(), order.end(), [&](int32_t x, int32_t y) {
    if (out[x].from != out[y].from) return out[x].from < out[y].from;
    return out[x].to > out[y].to;
  });
  std::vector<int32_t> stack;
  for (int32_t id : order) {
    while (!stack.empty() && out[stack.back()].to < out[id].from) stack.pop_back();
    out[id].parent = stack.empty() ? -1 : stack.back();
    stack.push_back(id);
  }
  return out;
}

std::vector<int32_t> cut_times(const Word& w) {
  std::vector<int32_t> out;
  long long x = 0, y = 0, minX = 0, minY = 0;
  for (int32_t i = 1; i <= static_cast<int32_t>(w.size()); ++i) {
    const Letter s = w[i - 1];
    if (s == Letter::A) ++x;
    else if (s == Letter::B) ++y;
    else {
      --x; --y;
      if (x < minX && y < minY) out.push_back(i);
    }
    minX = std::min(minX, x);
    minY = std::min(minY, y);
  }
  return out;
}

std::vector<int32_t> split_times(const Word& w) {
  const int32_t n = static_cast<int32_t>(w.size());
  std::vector<int32_t> out;
  // minimum partial sums of the suffix, per coordinate
  long long ma = 0, mb = 0;
  std::vector<uint8_t> ok(n + 1, 0);
  for (int32_t t = n; t >= 1; --t) {
    const Letter s = w[t - 1];
    const long long da = s == Letter::A ? 1 : (s == Letter::C ? -1 : 0);
    const long long db = s == Letter::B ? 1 : (s == Letter::C ? -1 : 0);
    if (t == n) { ma = da; mb = db; }
    else { ma = da + std::min(0LL, ma); mb = db + std::min(0LL, mb); }
    ok[t] = (ma >= 0 && mb >= 0);
  }
  for (int32_t t = 1; t <= n; ++t)
    if (ok[t]) out.push_back(t);
  return out;
}

bool isSphereWord(const Word& w, const MatchTable& m) {
  return !w.empty() && m.inK && m.endsAtOrigin;
}

bool isDiskWord(const Word& w, const MatchTable& m, int32_t* hOut) {
  if (!m.inKsuf) return false;
  auto [x, y] = endpoint(w);
  if (x != 0 || y > 0) return false;
  const long long h = -y;
  long long cx = 0, cy = 0;
  for (Letter s : w) {
    if (s == Letter::A) ++cx;
    else if (s == Letter::B) ++cy;
    else { --cx; --cy; }
    if (cx < 0 || cy < -h) return false;
  }
  if (hOut) *hOut = static_cast<int32_t>(h);
  return true;
}

}  // namespace kw
