#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "rhf/braid.hpp"

namespace rhf {

int BraidWord::closure_components() const {
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : letters) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
  std::vector<char> seen(strands, 0);
  int cycles = 0;
  for (int s = 0; s < strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int t = s; !seen[t]; t = perm[t]) seen[t] = 1;
  }
  return cycles;
}

std::string BraidWord::str() const {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters[k]);
  }
  return out;
}

BraidWord make_braid(std::vector<int> letters, int strands) {
  using R = BraidError::Reason;
  if (letters.empty()) throw BraidError(R::empty, "empty braid word");
  if (strands < 2) throw BraidError(R::out_of_range, "a braid needs at least 2 strands");
  std::vector<char> used(strands, 0);
  for (int l : letters) {
    if (l == 0 || std::abs(l) > strands - 1)
      throw BraidError(R::out_of_range, "letter " + std::to_string(l) + " out of range for " +
                                            std::to_string(strands) + " strands");
    used[std::abs(l)] = 1;
  }
  for (int i = 1; i < strands; ++i)
    if (!used[i])
      throw BraidError(R::missing_generator, "generator " + std::to_string(i) +
                                                 " never occurs; drop the unused strand or destabilize first");
  BraidWord b{strands, std::move(letters)};
  int comps = b.closure_components();
  if (comps != 1)
    throw BraidError(R::not_a_knot, "closure has " + std::to_string(comps) + " components, expected a knot");
  return b;
}

BraidWord parse_braid(const std::string& text, int strands) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',' || ch == '[' || ch == ']' || ch == ';') ch = ' ';
  std::istringstream in(s);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || used == 0) throw BraidError(BraidError::Reason::bad_token, "bad braid letter '" + tok + "'");
    letters.push_back(v);
  }
  return make_braid(std::move(letters), strands);
}

SeifertData seifert_data(const BraidWord& b) {
  SeifertData s;
  const int n = b.strands, c = b.crossings();
  s.strands = n;
  s.bands = c;
  s.column_bands.assign(n, {});
  s.disk_levels.assign(n + 1, {});
  for (int p = 0; p < c; ++p) {
    int i = std::abs(b.letters[p]);
    s.column_bands[i].push_back(p);
    s.disk_levels[i].push_back(p);
    s.disk_levels[i + 1].push_back(p);
  }
  for (int i = 1; i < n; ++i)
    for (std::size_t j = 0; j + 1 < s.column_bands[i].size(); ++j)
      s.gaps.push_back({i, s.column_bands[i][j], s.column_bands[i][j + 1]});
  s.curves = c - n + 1;
  s.genus = s.curves / 2;
  return s;
}

BraidWord stabilize(const BraidWord& b, bool positive) {
  BraidWord out = b;
  out.strands = b.strands + 1;
  out.letters.push_back(positive ? b.strands : -b.strands);
  return out;
}

BraidWord rotate(const BraidWord& b, int shift) {
  BraidWord out = b;
  const int c = b.crossings();
  shift = ((shift % c) + c) % c;
  std::rotate(out.letters.begin(), out.letters.begin() + shift, out.letters.end());
  return out;
}

BraidWord conjugate(const BraidWord& b, int letter) {
  // letter^-1 * w * letter, then cancel adjacent inverse pairs cyclically
  std::vector<int> w;
  w.push_back(-letter);
  w.insert(w.end(), b.letters.begin(), b.letters.end());
  w.push_back(letter);
  std::vector<int> red;
  for (int l : w) {
    if (!red.empty() && red.back() == -l) red.pop_back();
    else red.push_back(l);
  }
  while (red.size() >= 2 && red.front() == -red.back()) {
    red.pop_back();
    red.erase(red.begin());
  }
  return BraidWord{b.strands, red};
}

std::vector<BraidWord> markov_variants(const BraidWord& b, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BraidWord> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < 100 * (count + 1)) {
    ++attempts;
    BraidWord w = b;
    int moves = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < moves; ++k) {
      switch (rng() % 3) {
        case 0:
          w = rotate(w, 1 + static_cast<int>(rng() % w.letters.size()));
          break;
        case 1:
          w = stabilize(w, rng() % 2 == 0);
          break;
        default: {
          int i = 1 + static_cast<int>(rng() % (w.strands - 1));
          w = conjugate(w, rng() % 2 ? i : -i);
        }
      }
    }
    try {
      out.push_back(make_braid(w.letters, w.strands));
    } catch (const BraidError&) {
      // conjugation can cancel the last occurrence of a generator
    }
  }
  return out;
}

}  // namespace rhf
