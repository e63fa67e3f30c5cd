#include "qparikh/words.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <utility>

#include "qparikh/errors.hpp"

namespace qparikh {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_latin(char c) { return c >= 'a' && c <= 'z'; }

struct Token {
  Letter letter;
  std::size_t length;
};

std::optional<Token> next_token(std::string_view text, std::size_t pos, Script script) {
  char c = text[pos];
  if (script == Script::Latin) {
    if (is_latin(c)) return Token{Letter{static_cast<std::uint32_t>(c - 'a' + 1)}, 1};
    return std::nullopt;
  }
  if (is_digit(c)) return Token{Letter{static_cast<std::uint32_t>(c - '0')}, 1};
  if (c != '[') return std::nullopt;
  auto close = text.find(']', pos);
  if (close == std::string_view::npos || close == pos + 1) return std::nullopt;
  std::uint32_t id = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos + 1, text.data() + close, id);
  if (ec != std::errc() || ptr != text.data() + close) return std::nullopt;
  return Token{Letter{id}, close - pos + 1};
}

Script script_of(std::string_view text) {
  if (!text.empty() && is_latin(text.front())) return Script::Latin;
  return Script::Digits;
}

}  // namespace

Alphabet::Alphabet(Script script, std::set<Letter> letters)
    : script_(script), letters_(std::move(letters)) {}

Alphabet Alphabet::infer(std::string_view text) {
  Word w = parse_word(text);
  return Alphabet(script_of(text), w.alphabet());
}

Word::Word(std::initializer_list<std::uint32_t> ids) {
  letters_.reserve(ids.size());
  for (auto id : ids) letters_.push_back(Letter{id});
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::set<Letter> Word::alphabet() const { return {letters_.begin(), letters_.end()}; }

bool Word::contains(Letter a) const {
  return std::find(letters_.begin(), letters_.end(), a) != letters_.end();
}

std::optional<std::size_t> Word::first_adjacent_repeat() const {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i] == letters_[i + 1]) return i;
  return std::nullopt;
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> out(a.letters_);
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word parse_word(std::string_view text, const std::optional<Alphabet>& alphabet) {
  Script script = alphabet ? alphabet->script() : script_of(text);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto tok = next_token(text, pos, script);
    if (!tok || (alphabet && !alphabet->contains(tok->letter))) {
      throw Error(ErrorCode::UnknownCharacter,
                  "character '" + std::string(1, text[pos]) + "' at position " +
                      std::to_string(pos) + " has no letter mapping");
    }
    letters.push_back(tok->letter);
    pos += tok->length;
  }
  return Word(std::move(letters));
}

std::string format_letter(Letter a, Script script) {
  if (script == Script::Latin && a.id >= 1 && a.id <= 26)
    return std::string(1, static_cast<char>('a' + a.id - 1));
  if (script == Script::Digits && a.id <= 9) return std::string(1, static_cast<char>('0' + a.id));
  return "[" + std::to_string(a.id) + "]";
}

std::string format_word(const Word& w, Script script) {
  std::string out;
  for (Letter a : w) out += format_letter(a, script);
  return out;
}

Word reverse_word(const Word& u) {
  std::vector<Letter> out(u.begin(), u.end());
  std::reverse(out.begin(), out.end());
  return Word(std::move(out));
}

Word word_power(const Word& u, std::size_t n) {
  std::vector<Letter> out;
  out.reserve(u.size() * n);
  for (std::size_t k = 0; k < n; ++k) out.insert(out.end(), u.begin(), u.end());
  return Word(std::move(out));
}

std::vector<std::vector<std::size_t>> occurrences(const Word& u, const Word& v) {
  std::map<Letter, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < u.size(); ++i) positions[u[i]].push_back(i);

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  current.reserve(v.size());
  // Depth-first over the next admissible position of v[current.size()].
  std::function<void(std::size_t)> descend = [&](std::size_t from) {
    std::size_t m = current.size();
    if (m == v.size()) {
      out.push_back(current);
      return;
    }
    auto it = positions.find(v[m]);
    if (it == positions.end()) return;
    const auto& pos = it->second;
    for (auto p = std::lower_bound(pos.begin(), pos.end(), from); p != pos.end(); ++p) {
      // Not enough letters left for the remainder of v.
      if (u.size() - *p < v.size() - m) break;
      current.push_back(*p);
      descend(*p + 1);
      current.pop_back();
    }
  };
  descend(0);
  return out;
}

mpz_class subword_count(const Word& u, const Word& v) {
  std::vector<mpz_class> count(v.size() + 1, 0);
  count[0] = 1;
  for (Letter a : u)
    for (std::size_t j = v.size(); j >= 1; --j)
      if (v[j - 1] == a) count[j] += count[j - 1];
  return count[v.size()];
}

LeftInfiniteWord::LeftInfiniteWord(Kind kind, Word period,
                                   std::function<Letter(std::uint64_t)> f, std::string name)
    : kind_(kind), period_(std::move(period)), custom_(std::move(f)), name_(std::move(name)) {}

LeftInfiniteWord LeftInfiniteWord::periodic(Word u) {
  if (u.empty()) throw Error(ErrorCode::EmptyPeriod, "periodic stream needs a nonempty period");
  std::string name = "periodic:" + format_word(u);
  return LeftInfiniteWord(Kind::Periodic, std::move(u), {}, std::move(name));
}

LeftInfiniteWord LeftInfiniteWord::thue_morse() {
  return LeftInfiniteWord(Kind::ThueMorse, Word{}, {}, "thue-morse");
}

LeftInfiniteWord LeftInfiniteWord::custom(std::function<Letter(std::uint64_t)> letter_at,
                                          std::string name) {
  return LeftInfiniteWord(Kind::Custom, Word{}, std::move(letter_at), std::move(name));
}

Letter LeftInfiniteWord::letter_at(std::uint64_t i) const {
  switch (kind_) {
    case Kind::Periodic: {
      std::size_t len = period_.size();
      return period_[len - 1 - static_cast<std::size_t>(i % len)];
    }
    case Kind::ThueMorse:
      return Letter{static_cast<std::uint32_t>(std::popcount(i) & 1)};
    case Kind::Custom:
      return custom_(i);
  }
  return Letter{};
}

Word LeftInfiniteWord::prefix(std::size_t n) const {
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[n - 1 - i] = letter_at(i);
  return Word(std::move(out));
}

LeftInfiniteWord make_stream(std::string_view text) {
  if (text == "thue-morse") return LeftInfiniteWord::thue_morse();
  constexpr std::string_view kPeriodic = "periodic:";
  if (text.substr(0, kPeriodic.size()) == kPeriodic)
    return LeftInfiniteWord::periodic(parse_word(text.substr(kPeriodic.size())));
  throw Error(ErrorCode::InvalidArgument,
              "unknown stream '" + std::string(text) + "' (expected periodic:<word> or thue-morse)");
}

Morphism::Morphism(std::map<Letter, Word> images) : images_(std::move(images)) {
  bool first = true, same = true;
  std::size_t r = 0;
  for (const auto& [a, img] : images_) {
    if (img.empty())
      throw Error(ErrorCode::ErasingMorphism,
                  "image of letter " + format_letter(a) + " is the empty word");
    if (first) r = img.size(), first = false;
    else if (img.size() != r) same = false;
  }
  if (!first && same) uniform_ = r;
}

const Word& Morphism::image(Letter a) const {
  auto it = images_.find(a);
  if (it == images_.end())
    throw Error(ErrorCode::InvalidArgument, "morphism has no image for letter " + format_letter(a));
  return it->second;
}

Word Morphism::apply(const Word& w) const {
  std::vector<Letter> out;
  for (Letter a : w) {
    const Word& img = image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out));
}

}  // namespace qparikh
