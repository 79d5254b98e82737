#ifndef BSNQ_WORDS_HPP
#define BSNQ_WORDS_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bsnq/arith.hpp"

namespace bsnq {

struct Syllable {
  int gen = 0;  // index into the ambient alphabet
  Int exp = 0;  // nonzero in stored form
  bool operator==(const Syllable&) const = default;
};

// A word in a finitely generated free group, stored freely reduced: adjacent
// syllables use distinct generators and no exponent is zero. The empty word is
// the identity.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(int gen, Int exp = 1) {
    FreeWord w;
    w.append(gen, exp);
    return w;
  }

  // Append one syllable, merging and cancelling to keep the word reduced.
  FreeWord& append(int gen, const Int& exp);
  FreeWord& append(const FreeWord& w);

  FreeWord inverse() const;
  FreeWord pow(const Int& k) const;

  bool is_identity() const { return syllables_.empty(); }
  std::size_t syllable_count() const { return syllables_.size(); }
  std::span<const Syllable> syllables() const { return syllables_; }

  // Total number of letters, counting multiplicity.
  Int letter_length() const;

  // Sum of exponents of one generator.
  Int exponent_sum(int gen) const;

  int max_generator() const;

  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

inline FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord r = a;
  r.append(b);
  return r;
}

// [u, v] = u^-1 v^-1 u v, freely reduced.
FreeWord commutator_word(const FreeWord& u, const FreeWord& v);

// v^-1 u v.
FreeWord conjugate_word(const FreeWord& u, const FreeWord& v);

struct ParseError : std::runtime_error {
  std::size_t position;  // 1-based character offset
  ParseError(std::string msg, std::size_t pos);
};

// Grammar:
//   word := "1" | term { ("*" | whitespace) term }
//   term := atom ["^" signed-integer]
//   atom := name | "(" word ")" | "[" word "," word "]"
// "[u,v]" expands to u^-1 v^-1 u v. An exponent directly on a bracket is
// rejected; wrap it in parentheses first.
FreeWord parse_word(std::string_view text, std::span<const std::string> names);

// Inverse of parse_word; the identity prints as "1".
std::string format_word(const FreeWord& w, std::span<const std::string> names);

}  // namespace bsnq

#endif
