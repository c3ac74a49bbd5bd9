#pragma once

#include <map>
#include <string>
#include <vector>

#include "rhf/pipeline.hpp"

namespace rhf::test {

inline std::string fixture(const std::string& name) { return std::string(RHF_FIXTURES) + "/" + name; }

struct Knot {
  std::string name;
  int strands;
  std::vector<int> word;
};

// first rows of the corpus, small enough for every property test
inline const std::vector<Knot>& small_knots() {
  static const std::vector<Knot> knots = {
      {"unknot", 2, {1}},
      {"3_1", 2, {1, 1, 1}},
      {"4_1", 3, {1, -2, 1, -2}},
      {"5_1", 2, {1, 1, 1, 1, 1}},
      {"5_2", 3, {1, 1, 1, 2, -1, 2}},
      {"6_1", 4, {1, 1, 2, -1, -3, 2, -3}},
      {"6_2", 3, {1, 1, 1, -2, 1, -2}},
      {"6_3", 3, {1, 1, -2, 1, -2, -2}},
      {"7_6", 4, {1, 1, -2, 1, 3, -2, 3}},
      {"7_7", 4, {1, -2, 1, -2, 3, -2, 3}},
  };
  return knots;
}

inline BraidWord braid(const Knot& k) { return make_braid(k.word, k.strands); }

// analyses are reused across test cases
inline const Analysis& analysis_of(const std::vector<int>& word, int strands) {
  static std::map<std::pair<std::vector<int>, int>, Analysis> cache;
  auto key = std::make_pair(word, strands);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, analyze_braid(make_braid(word, strands))).first;
  return it->second;
}

inline const Analysis& analysis_of(const Knot& k) { return analysis_of(k.word, k.strands); }

inline std::vector<long long> sorted(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace rhf::test
