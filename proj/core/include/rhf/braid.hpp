#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhf/diagram.hpp"
#include "rhf/errors.hpp"
#include "rhf/snf.hpp"

namespace rhf {

struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  int crossings() const { return static_cast<int>(letters.size()); }
  int closure_components() const;
  std::string str() const;  // "1,-2,1,-2"
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct BraidError : InputError {
  enum class Reason { empty, bad_token, out_of_range, not_a_knot, missing_generator };
  Reason reason;
  BraidError(Reason r, const std::string& what) : InputError(what), reason(r) {}
};

// Checks the invariants of an already split word; throws BraidError.
BraidWord make_braid(std::vector<int> letters, int strands);
BraidWord parse_braid(const std::string& text, int strands);

struct Gap {
  int column;  // 1..n-1
  int lower;   // word position of the band below
  int upper;   // word position of the band above
};

struct SeifertData {
  int strands = 0;
  int bands = 0;
  std::vector<std::vector<int>> column_bands;  // index 1..n-1, word positions in order
  std::vector<std::vector<int>> disk_levels;   // index 1..n, positions of bands attached to disk i
  std::vector<Gap> gaps;                       // curve order: by column, then height
  int genus = 0;
  int curves = 0;
};

SeifertData seifert_data(const BraidWord& b);

// Double of the Bennequin surface of the closure, cut into cells.
RealDiagram build_real_diagram(const BraidWord& b);

// Alexander polynomial from the reduced Burau representation, lowest degree
// first, normalized so the constant term is nonzero and the leading sign positive.
std::vector<Integer> alexander_polynomial(const BraidWord& b);
Integer knot_determinant(const BraidWord& b);

// Random conjugations and stabilizations; each result is a valid knot braid.
std::vector<BraidWord> markov_variants(const BraidWord& b, int count, std::uint64_t seed);
BraidWord stabilize(const BraidWord& b, bool positive);
BraidWord conjugate(const BraidWord& b, int letter);
BraidWord rotate(const BraidWord& b, int shift);

}  // namespace rhf
