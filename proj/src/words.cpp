#include "sgm/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace sgm {

Letters free_reduce(std::span<Letter const> w) {
  Letters out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Letters invert(std::span<Letter const> w) {
  Letters out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

Letters concat_reduced(std::span<Letter const> u, std::span<Letter const> v) {
  Letters out = free_reduce(u);
  for (Letter x : v) {
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

bool is_reduced(std::span<Letter const> w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) {
      return false;
    }
  }
  return true;
}

Letters cyclically_reduce(std::span<Letter const> w) {
  Letters r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Letters(r.begin() + static_cast<std::ptrdiff_t>(lo),
                 r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
  for (std::size_t i = 0; i < _names.size(); ++i) {
    auto const& n = _names[i];
    if (n.empty()) {
      throw std::invalid_argument("generator names must be non-empty");
    }
    if (n == "1") {
      throw std::invalid_argument("\"1\" is reserved for the empty word");
    }
    for (char c : n) {
      if (c == '^' || c == '#' || std::isspace(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("invalid generator name \"" + n + "\"");
      }
    }
    if (!_index.emplace(n, i).second) {
      throw std::invalid_argument("duplicate generator name \"" + n + "\"");
    }
  }
}

std::size_t Alphabet::index_of(std::string_view name) const {
  auto it = _index.find(std::string(name));
  if (it == _index.end()) {
    throw std::out_of_range("unknown generator \"" + std::string(name) + "\"");
  }
  return it->second;
}

bool Alphabet::contains(std::string_view name) const {
  return _index.contains(std::string(name));
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<Alphabet const>(std::move(names));
}

Word::Word(AlphabetPtr alphabet, Letters letters)
    : _alphabet(std::move(alphabet)), _letters(std::move(letters)) {
  if (!_alphabet) {
    throw std::invalid_argument("word needs an alphabet");
  }
  for (Letter x : _letters) {
    if (x.code() == 0 || x.index() >= _alphabet->size()) {
      throw std::out_of_range("letter outside the alphabet");
    }
  }
}

bool operator==(Word const& x, Word const& y) {
  return same_alphabet(*x._alphabet, *y._alphabet) && x._letters == y._letters;
}

bool same_alphabet(Alphabet const& x, Alphabet const& y) {
  return &x == &y || x == y;
}

void require_same_alphabet(Word const& u, Word const& v) {
  if (!same_alphabet(*u.alphabet(), *v.alphabet())) {
    throw AlphabetMismatch("words are over different alphabets");
  }
}

Word free_reduce(Word const& w) {
  return Word(w.alphabet(), free_reduce(w.letters()));
}

Word invert(Word const& w) { return Word(w.alphabet(), invert(w.letters())); }

Word concat(Word const& u, Word const& v) {
  require_same_alphabet(u, v);
  return Word(u.alphabet(), concat_reduced(u.letters(), v.letters()));
}

Word conjugate(Word const& w, Word const& by) {
  require_same_alphabet(w, by);
  Letters out = concat_reduced(by.letters(), w.letters());
  out = concat_reduced(out, invert(by.letters()));
  return Word(w.alphabet(), std::move(out));
}

bool are_freely_equal(Word const& u, Word const& v) {
  require_same_alphabet(u, v);
  return free_reduce(u.letters()) == free_reduce(v.letters());
}

namespace {

constexpr long kMaxExponent = 1'000'000;

}  // namespace

Word parse_word(std::string_view text, AlphabetPtr const& alphabet) {
  Letters letters;
  std::size_t pos = 0;
  std::size_t tokens = 0;
  bool saw_identity = false;
  while (true) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == text.size()) {
      break;
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    std::string_view token = text.substr(start, pos - start);
    std::size_t column = start + 1;
    ++tokens;
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    auto caret = token.find('^');
    std::string_view name = token.substr(0, caret);
    long exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = token.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') {
        digits.remove_prefix(1);
      }
      auto [end, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc() ||
          end != digits.data() + digits.size()) {
        throw ParseError("malformed exponent in \"" + std::string(token) + "\"",
                         column + caret + 1);
      }
      if (exponent > kMaxExponent || exponent < -kMaxExponent) {
        throw ParseError("exponent out of range in \"" + std::string(token) + "\"",
                         column + caret + 1);
      }
    }
    if (name.empty() || !alphabet->contains(name)) {
      throw ParseError("unknown generator \"" + std::string(name) + "\"", column);
    }
    auto letter = Letter::generator(alphabet->index_of(name), exponent < 0);
    for (long i = 0; i < std::labs(exponent); ++i) {
      letters.push_back(letter);
    }
  }
  if (tokens == 0) {
    throw ParseError("empty word (write 1 for the identity)", 1);
  }
  if (saw_identity && tokens > 1) {
    throw ParseError("\"1\" must stand alone", 1);
  }
  return Word(alphabet, free_reduce(letters));
}

std::string print_letters(std::span<Letter const> w, Alphabet const& alphabet) {
  if (w.empty()) {
    return "1";
  }
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    long run = static_cast<long>(j - i);
    if (!first) {
      out << ' ';
    }
    first = false;
    out << alphabet.name(w[i].index());
    long exponent = w[i].is_inverse() ? -run : run;
    if (exponent != 1) {
      out << '^' << exponent;
    }
    i = j;
  }
  return out.str();
}

std::string print_word(Word const& w) {
  return print_letters(w.letters(), *w.alphabet());
}

}  // namespace sgm
