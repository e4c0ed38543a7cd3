#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "kw/walk.hpp"

using namespace kw;

namespace {

const std::string kFig1 = "abbaabbcaccbcaaaabcbbbbacacc";

// All words of length n over {a,b,c}, as strings.
std::vector<std::string> allWords(int n) {
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * 3);
    for (const auto& s : out)
      for (char ch : {'a', 'b', 'c'}) next.push_back(s + ch);
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("parse accepts the alphabet and reports bad symbols") {
  CHECK(parse("").empty());
  CHECK(parse(kFig1).size() == 28);
  CHECK(toString(parse(kFig1)) == kFig1);
  try {
    parse("abx");
    FAIL("expected InvalidSymbol");
  } catch (const Error& e) {
    CHECK(e.code == Errc::InvalidSymbol);
    CHECK(e.position == 3);
  }
}

TEST_CASE("matchings on abc") {
  Word w = parse("abc");
  MatchTable m = matchings(w);
  CHECK(m.aMatch[3] == 1);
  CHECK(m.bMatch[3] == 2);
  CHECK(m.kind[3] == CKind::MatchedTypeA);
  CHECK(m.cMatch[1] == 3);
  CHECK(m.cMatch[2] == 3);
  CHECK(m.inK);
  CHECK(m.inKbar);
  CHECK(m.inKsuf);
  CHECK(m.endsAtOrigin);
  CHECK(m.closeMatch(3) == 2);
  CHECK(m.farMatch(3) == 1);
}

TEST_CASE("matchings on ac") {
  Word w = parse("ac");
  MatchTable m = matchings(w);
  CHECK(m.aMatch[2] == 1);
  CHECK(m.bMatch[2] == 0);
  CHECK(m.kind[2] == CKind::UnmatchedTypeB);
  CHECK(m.inKbar);
  CHECK_FALSE(m.inK);
  CHECK(m.closeMatch(2) == 1);
  CHECK(m.farMatch(2) == 0);
}

TEST_CASE("matchings on c") {
  Word w = parse("c");
  MatchTable m = matchings(w);
  CHECK(m.aMatch[1] == 0);
  CHECK(m.bMatch[1] == 0);
  CHECK(m.kind[1] == CKind::Orphan);
  CHECK_FALSE(m.inKbar);
}

TEST_CASE("endpoint") {
  CHECK(endpoint(parse("")) == std::pair<long long, long long>(0, 0));
  CHECK(endpoint(parse(kFig1)) == std::pair<long long, long long>(2, 2));
  CHECK(endpoint(parse("aabcc")) == std::pair<long long, long long>(0, -1));
}

TEST_CASE("cone excursions") {
  {
    Word w = parse("abc");
    MatchTable m = matchings(w);
    ConeExcursion e = cone_excursion(w, m, 2);
    CHECK(e.from == 2);
    CHECK(e.to == 3);
    CHECK(e.height == 1);
    CHECK_THROWS_AS(cone_excursion(w, m, 1), Error);
    try {
      cone_excursion(w, m, 1);
    } catch (const Error& e2) {
      CHECK(e2.code == Errc::NotCloseMatched);
    }
  }
  {
    Word w = parse("aabcc");
    MatchTable m = matchings(w);
    ConeExcursion e = cone_excursion(w, m, 1);
    CHECK(e.from == 1);
    CHECK(e.to == 5);
    CHECK(e.height == 1);
  }
}

TEST_CASE("spine reduced words") {
  {
    Word w = parse("abcaacabbaaabccbabaabbccacaccbabbccaabcc");
    MatchTable m = matchings(w);
    SpineDecomposition d = spine(w, m);
    CHECK(reducedToString(d.reducedWord) ==
          "a abar1 a bbar1 a b b a bbar1 b bbar2 b a abar2 bbar1");
  }
  {
    Word w = parse("ab");
    MatchTable m = matchings(w);
    SpineDecomposition d = spine(w, m);
    CHECK(reducedToString(d.reducedWord) == "a b");
    CHECK(d.spineTimes == std::vector<int32_t>{1, 2});
  }
  {
    Word w = parse("aabcc");
    MatchTable m = matchings(w);
    SpineDecomposition d = spine(w, m);
    CHECK(reducedToString(d.reducedWord) == "bbar1");
    CHECK(d.spineTimes == std::vector<int32_t>{1});
    CHECK(d.leftCode == std::vector<int32_t>{0});
    CHECK(d.rightCode == std::vector<int32_t>{1, -1, 0});
  }
  {
    Word w = parse("c");
    MatchTable m = matchings(w);
    CHECK_THROWS_AS(spine(w, m), Error);
  }
}

TEST_CASE("parent maps") {
  {
    Word w = parse("abc");
    MatchTable m = matchings(w);
    CHECK(parent_p(w, m, 3) == 4);     // top-a
    CHECK(parent_pvec(w, m, 3) == 4);  // c3 white, top-a white: m = 1
    CHECK_THROWS_AS(parent_p(w, m, 1), Error);  // matched a-step: not a vertex
  }
  {
    Word w = parse("ac");
    MatchTable m = matchings(w);
    // c2 lacks a b-match, so its only matching is close; its chain goes to
    // the black side: next unmatched type-b c, else first unmatched b-step.
    CHECK(parent_p(w, m, 2) == 4);  // top-b
    CHECK(parent_pvec(w, m, 2) == 4);
  }
  {
    Word w = parse("abcabc");
    MatchTable m = matchings(w);
    CHECK(parent_p(w, m, 6) == 7);  // top-a
  }
  {
    Word w = parse("aabcc");
    MatchTable m = matchings(w);
    CHECK(parent_p(w, m, 4) == 5);
    CHECK(parent_pvec(w, m, 4) == 7);  // top-b
    CHECK(parent_pvec(w, m, 5) == 7);
  }
}

TEST_CASE("envelope excursions") {
  {
    Word w = parse("abc");
    MatchTable m = matchings(w);
    CHECK(envelope_excursions(w, m).empty());
  }
  {
    Word w = parse("");
    MatchTable m = matchings(w);
    CHECK(envelope_excursions(w, m).empty());
  }
}

TEST_CASE("cut and split times") {
  CHECK(split_times(parse("abcabc")) == std::vector<int32_t>{1, 4});
  CHECK(cut_times(parse("c")) == std::vector<int32_t>{1});
  CHECK(cut_times(parse("")).empty());
  CHECK(split_times(parse("")).empty());
  // the walk aabcc dips below zero in y only at the last step
  CHECK(cut_times(parse("aabccc")) == std::vector<int32_t>{6});
}

TEST_CASE("class predicates") {
  {
    Word w = parse("abc");
    MatchTable m = matchings(w);
    CHECK(isSphereWord(w, m));
  }
  {
    Word w = parse("");
    MatchTable m = matchings(w);
    CHECK_FALSE(isSphereWord(w, m));
    int32_t h = -1;
    CHECK(isDiskWord(w, m, &h));
    CHECK(h == 0);
  }
  {
    Word w = parse("aabcc");
    MatchTable m = matchings(w);
    int32_t h = -1;
    CHECK(isDiskWord(w, m, &h));
    CHECK(h == 1);
  }
  {
    Word w = parse("ac");
    MatchTable m = matchings(w);
    int32_t h = -1;
    CHECK(isDiskWord(w, m, &h));  // boundary of length 3, no interior vertex
    CHECK(h == 1);
  }
  {
    Word w = parse("a");
    MatchTable m = matchings(w);
    CHECK_FALSE(isDiskWord(w, m));  // unmatched a-step
  }
}

TEST_CASE("property: matching tables are involutive and non-crossing") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& s : allWords(n)) {
      Word w = parse(s);
      MatchTable m = matchings(w);
      std::vector<std::pair<int, int>> aPairs, bPairs;
      for (int k = 1; k <= m.n; ++k) {
        if (w[k - 1] != Letter::C) {
          if (m.cMatch[k]) {
            const int c = m.cMatch[k];
            CHECK(w[c - 1] == Letter::C);
            CHECK((m.aMatch[c] == k || m.bMatch[c] == k));
          }
          continue;
        }
        if (m.aMatch[k]) {
          CHECK(w[m.aMatch[k] - 1] == Letter::A);
          CHECK(m.cMatch[m.aMatch[k]] == k);
          aPairs.emplace_back(m.aMatch[k], k);
        }
        if (m.bMatch[k]) {
          CHECK(w[m.bMatch[k] - 1] == Letter::B);
          CHECK(m.cMatch[m.bMatch[k]] == k);
          bPairs.emplace_back(m.bMatch[k], k);
        }
      }
      for (auto pairs : {aPairs, bPairs})
        for (std::size_t x = 0; x < pairs.size(); ++x)
          for (std::size_t y = x + 1; y < pairs.size(); ++y) {
            const auto [i1, k1] = pairs[x];
            const auto [i2, k2] = pairs[y];
            const bool crossing = (i1 < i2 && i2 < k1 && k1 < k2) ||
                                  (i2 < i1 && i1 < k2 && k2 < k1);
            CHECK_FALSE(crossing);
          }
    }
  }
}

TEST_CASE("property: matching definition agrees with the sub-excursion characterization") {
  // w_i (an a-step) matches w_k (a c-step) iff the a/c counts balance over
  // [i..k] and every proper prefix keeps a strict surplus of a-steps.
  for (int n = 0; n <= 7; ++n) {
    for (const auto& s : allWords(n)) {
      Word w = parse(s);
      MatchTable m = matchings(w);
      for (int i = 1; i <= n; ++i) {
        if (w[i - 1] != Letter::A) continue;
        for (int k = i + 1; k <= n; ++k) {
          if (w[k - 1] != Letter::C) continue;
          int bal = 0;
          bool strict = true;
          for (int t = i; t <= k; ++t) {
            if (w[t - 1] == Letter::A) ++bal;
            else if (w[t - 1] == Letter::C) --bal;
            if (t < k && bal <= 0) strict = false;
          }
          const bool defMatch = (bal == 0) && strict;
          CHECK(defMatch == (m.aMatch[k] == i));
        }
      }
    }
  }
}

TEST_CASE("property: reduced word reconstructs the original word") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& s : allWords(n)) {
      Word w = parse(s);
      MatchTable m = matchings(w);
      if (!m.inKbar) continue;
      SpineDecomposition d = spine(w, m);
      std::string rebuilt;
      for (const ReducedStep& r : d.reducedWord) {
        if (r.drop == 0) {
          rebuilt.push_back(letterChar(w[r.time - 1]));
        } else {
          const int to = m.cMatch[r.time];
          rebuilt += s.substr(r.time - 1, to - r.time + 1);
        }
      }
      CHECK(rebuilt == s);
      // projections are valid loop codes
      for (auto code : {d.leftCode, d.rightCode}) {
        long long h = 0;
        for (std::size_t t = 0; t < code.size(); ++t) {
          CHECK(code[t] <= 1);
          h += code[t];
          CHECK(h >= 0);
        }
        CHECK(h == 0);
      }
      CHECK(d.reducedWord.size() == d.spineTimes.size());
      CHECK(d.shuffle.size() == d.reducedWord.size());
    }
  }
}

TEST_CASE("property: envelope intervals are disjoint or nested") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& s : allWords(n)) {
      Word w = parse(s);
      MatchTable m = matchings(w);
      if (!m.inKbar) continue;
      auto env = envelope_excursions(w, m);
      for (std::size_t x = 0; x < env.size(); ++x)
        for (std::size_t y = x + 1; y < env.size(); ++y) {
          const auto& u = env[x];
          const auto& v = env[y];
          const bool disjoint = u.to < v.from || v.to < u.from;
          const bool nested = (u.from <= v.from && v.to <= u.to) ||
                              (v.from <= u.from && u.to <= v.to);
          CHECK((disjoint || nested));
        }
      for (const auto& r : env) {
        CHECK(w[r.to - 1] == Letter::C);
        CHECK(m.farMatch(r.to) == r.from);
        if (r.parent >= 0) {
          CHECK(env[r.parent].from < r.from);
          CHECK(env[r.parent].to > r.to);
        }
      }
    }
  }
}

TEST_CASE("property: unmatched counts equal the endpoint on quadrant walks") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& s : allWords(n)) {
      Word w = parse(s);
      MatchTable m = matchings(w);
      if (!m.inK) continue;
      int unA = 0, unB = 0;
      for (int i = 1; i <= n; ++i)
        if (w[i - 1] != Letter::C && m.cMatch[i] == 0)
          (w[i - 1] == Letter::A ? unA : unB)++;
      auto [x, y] = endpoint(w);
      CHECK(x == unA);
      CHECK(y == unB);
      // quadrant check
      long long cx = 0, cy = 0;
      for (Letter t : w) {
        if (t == Letter::A) ++cx;
        else if (t == Letter::B) ++cy;
        else { --cx; --cy; }
        CHECK(cx >= 0);
        CHECK(cy >= 0);
      }
    }
  }
}

TEST_CASE("property: split times are exactly the quadrant suffixes") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& s : allWords(n)) {
      Word w = parse(s);
      auto st = split_times(w);
      std::vector<int32_t> brute;
      for (int t = 1; t <= n; ++t) {
        Word suf(w.begin() + (t - 1), w.end());
        if (matchings(suf).inK) brute.push_back(t);
      }
      CHECK(st == brute);
    }
  }
}
