#include "tqc/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tqc/rng.hpp"

namespace tqc {

void validate_braid_word(const BraidWord& w) {
  if (w.strands < 1) throw std::invalid_argument("strand count must be positive");
  for (int letter : w.letters) {
    if (letter == 0) throw std::invalid_argument("zero is not a generator");
    if (std::abs(letter) > w.strands - 1) {
      throw std::invalid_argument("index out of range: " + std::to_string(letter) +
                                  " on " + std::to_string(w.strands) + " strands");
    }
  }
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(-*it);
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  for (int letter : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -letter) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(letter);
    }
  }
  return out;
}

BraidWord shift_letters(const BraidWord& w, int offset, int new_strands) {
  BraidWord out{new_strands, {}};
  out.letters.reserve(w.letters.size());
  for (int letter : w.letters) {
    out.letters.push_back(letter > 0 ? letter + offset : letter - offset);
  }
  validate_braid_word(out);
  return out;
}

BraidWord parse_braid_word(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("malformed header: empty input, expected \"n=<strands>\"");
  }
  // Trim trailing carriage return / whitespace.
  while (!header.empty() && (header.back() == '\r' || header.back() == ' ' || header.back() == '\t')) {
    header.pop_back();
  }
  if (header.rfind("n=", 0) != 0) {
    throw std::invalid_argument("malformed header: expected \"n=<strands>\", got \"" + header + "\"");
  }
  int strands = 0;
  try {
    std::size_t pos = 0;
    strands = std::stoi(header.substr(2), &pos);
    if (pos != header.size() - 2) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed header: cannot parse strand count in \"" + header + "\"");
  }
  if (strands < 1) throw std::invalid_argument("malformed header: strand count must be positive");

  BraidWord w{strands, {}};
  std::string tok;
  while (in >> tok) {
    int letter = 0;
    try {
      std::size_t pos = 0;
      letter = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed letter: \"" + tok + "\"");
    }
    if (letter == 0) throw std::invalid_argument("zero is not a generator");
    if (std::abs(letter) > strands - 1) {
      throw std::invalid_argument("index out of range: " + tok + " on " +
                                  std::to_string(strands) + " strands");
    }
    w.letters.push_back(letter);
  }
  return w;
}

std::string format_braid_word(const BraidWord& w) {
  std::ostringstream os;
  os << "n=" << w.strands << '\n';
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) os << ' ';
    os << w.letters[i];
  }
  os << '\n';
  return os.str();
}

BraidWord random_braid_word(Rng& rng, int strands, int length) {
  if (strands < 2) throw std::invalid_argument("need at least 2 strands");
  BraidWord w{strands, {}};
  w.letters.reserve(length);
  for (int i = 0; i < length; ++i) {
    const int idx = 1 + static_cast<int>(rng.uniform_index(strands - 1));
    w.letters.push_back(rng.coin() ? idx : -idx);
  }
  return w;
}

}  // namespace tqc
