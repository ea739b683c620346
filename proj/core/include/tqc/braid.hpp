#pragma once

#include <string>
#include <vector>

namespace tqc {

class Rng;

// A braid word on `strands` strands.  Letter i (1-based, nonzero) denotes
// the elementary crossing of strands i and i+1; -i is its inverse.  The
// first letter acts first: diagrams are read bottom to top and
// represent_word applies the first letter's matrix first.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// Throws std::invalid_argument on zero letters or out-of-range indices.
void validate_braid_word(const BraidWord& w);

// Reverse the word and negate every letter.
BraidWord inverse(const BraidWord& w);

// Concatenate two words on the same strand count (a first, then b).
BraidWord concat(const BraidWord& a, const BraidWord& b);

// Cancel adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

// Shift every letter index by `offset` (embedding into a wider braid group).
BraidWord shift_letters(const BraidWord& w, int offset, int new_strands);

// Text format:
//   line 1: "n=<strands>"
//   line 2: whitespace-separated signed letters (may be empty)
// Distinct errors for a malformed header, a zero letter, and an
// out-of-range letter.
BraidWord parse_braid_word(const std::string& text);
std::string format_braid_word(const BraidWord& w);

// Uniform random word: each letter index uniform in 1..strands-1, sign fair.
BraidWord random_braid_word(Rng& rng, int strands, int length);

}  // namespace tqc
