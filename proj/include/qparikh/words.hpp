#pragma once

// Finite words, left-infinite streams and morphisms.
//
// Words are stored left-to-right. Text encoding comes in two scripts:
//   Digits: '0'..'9' are letters 0..9, "[n]" is letter n (used for large
//           position alphabets such as the images of sigma_z);
//   Latin:  'a'..'z' are letters 1..26.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qparikh {

struct Letter {
  std::uint32_t id = 0;

  constexpr auto operator<=>(const Letter&) const = default;
};

enum class Script { Digits, Latin };

class Alphabet {
 public:
  Alphabet(Script script, std::set<Letter> letters);

  /// The script of the first character decides; the letters are those seen.
  static Alphabet infer(std::string_view text);

  Script script() const { return script_; }
  const std::set<Letter>& letters() const { return letters_; }
  bool contains(Letter a) const { return letters_.count(a) != 0; }

 private:
  Script script_;
  std::set<Letter> letters_;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<std::uint32_t> ids);
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Factor of length `len` starting at `pos` (clamped to the word).
  Word factor(std::size_t pos, std::size_t len) const;
  void push_back(Letter a) { letters_.push_back(a); }

  std::set<Letter> alphabet() const;
  bool contains(Letter a) const;
  /// First position i with letters[i] == letters[i+1].
  std::optional<std::size_t> first_adjacent_repeat() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word parse_word(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);
std::string format_word(const Word& w, Script script = Script::Digits);
std::string format_letter(Letter a, Script script = Script::Digits);

Word reverse_word(const Word& u);
Word word_power(const Word& u, std::size_t n);

/// All left-to-right index tuples i_1 < ... < i_k with u[i_m] == v[m].
std::vector<std::vector<std::size_t>> occurrences(const Word& u, const Word& v);

/// Classical binomial coefficient (u choose v) by the counting DP.
mpz_class subword_count(const Word& u, const Word& v);

/// A word extending infinitely to the left, indexed from the right:
/// letter_at(0) is the rightmost letter.
class LeftInfiniteWord {
 public:
  enum class Kind { Periodic, ThueMorse, Custom };

  static LeftInfiniteWord periodic(Word u);
  static LeftInfiniteWord thue_morse();
  static LeftInfiniteWord custom(std::function<Letter(std::uint64_t)> letter_at,
                                 std::string name = "custom");

  Kind kind() const { return kind_; }
  const Word& period() const { return period_; }
  const std::string& name() const { return name_; }

  Letter letter_at(std::uint64_t i) const;
  /// x_{n-1} ... x_0 as a left-to-right word.
  Word prefix(std::size_t n) const;

 private:
  LeftInfiniteWord(Kind kind, Word period, std::function<Letter(std::uint64_t)> f,
                   std::string name);

  Kind kind_;
  Word period_;
  std::function<Letter(std::uint64_t)> custom_;
  std::string name_;
};

/// Parses "periodic:<word>" or "thue-morse".
LeftInfiniteWord make_stream(std::string_view text);

class Morphism {
 public:
  explicit Morphism(std::map<Letter, Word> images);

  const std::map<Letter, Word>& images() const { return images_; }
  const Word& image(Letter a) const;
  /// r when every image has length r.
  std::optional<std::size_t> uniform_length() const { return uniform_; }
  Word apply(const Word& w) const;

 private:
  std::map<Letter, Word> images_;
  std::optional<std::size_t> uniform_;
};

}  // namespace qparikh
