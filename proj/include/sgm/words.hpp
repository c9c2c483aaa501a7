// Free-group words over a named alphabet.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sgm {

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t column)
      : std::runtime_error(what + " (column " + std::to_string(column) + ")"),
        _column(column) {}
  std::size_t column() const noexcept { return _column; }

 private:
  std::size_t _column;
};

// A generator or its inverse. Stored as +(i+1) for generator i and -(i+1) for
// its inverse so that inversion is negation.
class Letter {
 public:
  constexpr Letter() = default;
  static constexpr Letter generator(std::size_t index, bool inverse = false) {
    auto code = static_cast<std::int32_t>(index) + 1;
    return Letter(inverse ? -code : code);
  }
  static constexpr Letter from_code(std::int32_t code) { return Letter(code); }

  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(std::abs(_code) - 1);
  }
  constexpr bool is_inverse() const noexcept { return _code < 0; }
  constexpr int sign() const noexcept { return _code < 0 ? -1 : 1; }
  constexpr Letter inverse() const noexcept { return Letter(-_code); }
  constexpr std::int32_t code() const noexcept { return _code; }
  // Position in the order a, a^-1, b, b^-1, ...
  constexpr std::size_t rank() const noexcept {
    return 2 * index() + (is_inverse() ? 1 : 0);
  }
  static constexpr Letter from_rank(std::size_t r) {
    return generator(r / 2, r % 2 == 1);
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr bool operator<(Letter x, Letter y) {
    return x.rank() < y.rank();
  }

 private:
  explicit constexpr Letter(std::int32_t code) : _code(code) {}
  std::int32_t _code = 0;
};

using Letters = std::vector<Letter>;

// Stack-based linear free reduction.
Letters free_reduce(std::span<Letter const> w);
Letters invert(std::span<Letter const> w);
Letters concat_reduced(std::span<Letter const> u, std::span<Letter const> v);
bool is_reduced(std::span<Letter const> w);
// Strips matching x ... x^-1 from the ends of a reduced word.
Letters cyclically_reduce(std::span<Letter const> w);

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return _names.size(); }
  std::string const& name(std::size_t i) const { return _names.at(i); }
  std::vector<std::string> const& names() const noexcept { return _names; }
  // Throws std::out_of_range for unknown names.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  friend bool operator==(Alphabet const& x, Alphabet const& y) {
    return x._names == y._names;
  }

 private:
  std::vector<std::string> _names;
  std::unordered_map<std::string, std::size_t> _index;
};

using AlphabetPtr = std::shared_ptr<Alphabet const>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

// A word over a specific alphabet. Words built through the public operations
// are always freely reduced; the raw constructor keeps letters as given.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet, Letters letters = {});

  AlphabetPtr const& alphabet() const noexcept { return _alphabet; }
  Letters const& letters() const noexcept { return _letters; }
  std::size_t size() const noexcept { return _letters.size(); }
  bool empty() const noexcept { return _letters.empty(); }

  // Exact letter-sequence equality (no reduction).
  friend bool operator==(Word const& x, Word const& y);

 private:
  AlphabetPtr _alphabet;
  Letters _letters;
};

bool same_alphabet(Alphabet const& x, Alphabet const& y);
void require_same_alphabet(Word const& u, Word const& v);

Word free_reduce(Word const& w);
Word invert(Word const& w);
Word concat(Word const& u, Word const& v);
// Reduced (by) w (by)^-1.
Word conjugate(Word const& w, Word const& by);
bool are_freely_equal(Word const& u, Word const& v);

Word parse_word(std::string_view text, AlphabetPtr const& alphabet);
std::string print_word(Word const& w);
std::string print_letters(std::span<Letter const> w, Alphabet const& alphabet);

}  // namespace sgm
