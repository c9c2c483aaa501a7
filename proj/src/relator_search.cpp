#include "sgm/relator_search.hpp"

#include <stdexcept>

namespace sgm {

namespace {

Letters symbol_word(std::vector<Letters> const& generators, int index) {
  auto const& g = generators.at(static_cast<std::size_t>(std::abs(index) - 1));
  return index > 0 ? g : invert(g);
}

int symbol_index(std::size_t rank) {
  int i = static_cast<int>(rank / 2) + 1;
  return rank % 2 == 0 ? i : -i;
}

}  // namespace

Letters subgroup_word_value(std::vector<Letters> const& generators,
                            std::span<int const> indices) {
  Letters value;
  for (int i : indices) {
    if (i == 0 || static_cast<std::size_t>(std::abs(i)) > generators.size()) {
      throw std::out_of_range("subgroup word index out of range");
    }
    value = concat_reduced(value, symbol_word(generators, i));
  }
  return value;
}

SubgroupWordEnumerator::SubgroupWordEnumerator(std::vector<Letters> generators)
    : _generators(std::move(generators)) {}

std::optional<SubgroupWord> SubgroupWordEnumerator::next() {
  if (_done) {
    return std::nullopt;
  }
  SubgroupWord w;
  for (auto d : _digits) {
    w.indices.push_back(symbol_index(d));
  }
  w.value = subgroup_word_value(_generators, w.indices);
  ++_position;

  std::size_t base = 2 * _generators.size();
  if (base == 0) {
    _done = true;
    return w;
  }
  // Odometer increment; on overflow the length grows by one.
  std::size_t i = _digits.size();
  while (i > 0) {
    --i;
    if (++_digits[i] < base) {
      return w;
    }
    _digits[i] = 0;
  }
  _digits.insert(_digits.begin(), 0);
  return w;
}

std::optional<SubgroupWord> subgroup_word_at(std::vector<Letters> const& generators,
                                             std::uint64_t n) {
  std::uint64_t base = 2 * generators.size();
  if (base == 0) {
    if (n > 0) {
      return std::nullopt;
    }
    return SubgroupWord{};
  }
  std::size_t length = 0;
  BigCount offset = n;
  BigCount block = 1;
  while (offset >= block) {
    offset -= block;
    block *= base;
    ++length;
  }
  std::vector<std::size_t> digits(length);
  for (std::size_t i = length; i > 0; --i) {
    digits[i - 1] = static_cast<std::size_t>(offset % base);
    offset /= base;
  }
  SubgroupWord w;
  for (auto d : digits) {
    w.indices.push_back(symbol_index(d));
  }
  w.value = subgroup_word_value(generators, w.indices);
  return w;
}

std::size_t ConjugateProduct::size() const {
  std::size_t s = factors.size();
  for (auto const& f : factors) {
    s += f.conjugator.size();
  }
  return s;
}

Letters product_value(Presentation const& p, ConjugateProduct const& product) {
  Letters value;
  for (auto const& f : product.factors) {
    if (f.relator >= p.relators().size()) {
      throw std::out_of_range("relator index out of range");
    }
    if (f.sign != 1 && f.sign != -1) {
      throw std::invalid_argument("factor sign must be +1 or -1");
    }
    auto const& r = p.relators()[f.relator];
    value = concat_reduced(value, f.conjugator);
    value = concat_reduced(value, f.sign > 0 ? r : invert(r));
    value = concat_reduced(value, invert(f.conjugator));
  }
  return value;
}

Letters first_reduced_word(std::size_t length) {
  return Letters(length, Letter::generator(0));
}

bool next_reduced_word(Letters& w, std::size_t alphabet_size) {
  std::size_t ranks = 2 * alphabet_size;
  std::size_t i = w.size();
  while (i > 0) {
    --i;
    std::size_t r = w[i].rank() + 1;
    for (; r < ranks; ++r) {
      if (i == 0 || Letter::from_rank(r) != w[i - 1].inverse()) {
        break;
      }
    }
    if (r < ranks) {
      w[i] = Letter::from_rank(r);
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        std::size_t s = 0;
        if (Letter::from_rank(s) == w[j - 1].inverse()) {
          ++s;
        }
        w[j] = Letter::from_rank(s);
      }
      return true;
    }
  }
  return false;
}

RelatorProductEnumerator::RelatorProductEnumerator(std::shared_ptr<Presentation const> p,
                                                   std::optional<std::size_t> max_size)
    : _presentation(std::move(p)),
      _max_size(max_size),
      _relator_choices(2 * _presentation->relators().size()),
      _letters(2 * _presentation->num_generators()) {}

bool RelatorProductEnumerator::first_composition() {
  _lengths.assign(_factors, 0);
  _lengths.back() = _size - _factors;
  return true;
}

bool RelatorProductEnumerator::next_composition() {
  std::size_t rest = 0;
  for (std::size_t i = _factors - 1; i > 0; --i) {
    rest += _lengths[i];
    if (rest > 0) {
      ++_lengths[i - 1];
      for (std::size_t j = i; j + 1 < _factors; ++j) {
        _lengths[j] = 0;
      }
      _lengths[_factors - 1] = rest - 1;
      return true;
    }
  }
  return false;
}

void RelatorProductEnumerator::reset_factors() {
  _conjugators.resize(_factors);
  _choices.assign(_factors, 0);
  for (std::size_t i = 0; i < _factors; ++i) {
    _conjugators[i] = first_reduced_word(_lengths[i]);
  }
}

bool RelatorProductEnumerator::advance_factors() {
  std::size_t k = _letters / 2;
  for (std::size_t i = _factors; i > 0; --i) {
    std::size_t j = i - 1;
    if (++_choices[j] < _relator_choices) {
      return true;
    }
    _choices[j] = 0;
    if (next_reduced_word(_conjugators[j], k)) {
      return true;
    }
    _conjugators[j] = first_reduced_word(_lengths[j]);
  }
  return false;
}

// Loads the first product of the next (size, factor count) class. Relators
// imply a non-empty alphabet, so every class with 1 <= f <= size is non-empty.
bool RelatorProductEnumerator::start_size_class() {
  if (_relator_choices == 0) {
    return false;
  }
  if (_factors > _size) {
    ++_size;
    _factors = 1;
  }
  if (_max_size && _size > *_max_size) {
    return false;
  }
  first_composition();
  reset_factors();
  return true;
}

std::optional<ConjugateProduct> RelatorProductEnumerator::next() {
  if (_done) {
    return std::nullopt;
  }
  if (!_started) {
    _started = true;
    _size = 1;
    _factors = 1;
    ++_position;
    return ConjugateProduct{};
  }
  if (!_active) {
    if (!start_size_class()) {
      _done = true;
      return std::nullopt;
    }
    _active = true;
  }
  ConjugateProduct product;
  for (std::size_t i = 0; i < _factors; ++i) {
    product.factors.push_back({_conjugators[i], _choices[i] / 2,
                               _choices[i] % 2 == 0 ? 1 : -1});
  }
  ++_position;

  if (!advance_factors()) {
    if (next_composition()) {
      reset_factors();
    } else {
      ++_factors;
      _active = false;
    }
  }
  return product;
}

BigCount reduced_word_count(std::size_t alphabet_size, std::size_t length) {
  if (length == 0) {
    return 1;
  }
  if (alphabet_size == 0) {
    return 0;
  }
  BigCount n = 2 * alphabet_size;
  for (std::size_t i = 1; i < length; ++i) {
    n *= 2 * alphabet_size - 1;
  }
  return n;
}

namespace {

// tuples(f, t): number of f-tuples of reduced words with total length t.
class TupleCounts {
 public:
  TupleCounts(std::size_t alphabet_size, std::size_t max_total)
      : _k(alphabet_size), _max(max_total) {}

  BigCount const& get(std::size_t f, std::size_t t) {
    while (_table.size() <= f) {
      std::size_t row = _table.size();
      std::vector<BigCount> counts(_max + 1, 0);
      if (row == 0) {
        counts[0] = 1;
      } else {
        for (std::size_t total = 0; total <= _max; ++total) {
          for (std::size_t last = 0; last <= total; ++last) {
            counts[total] += _table[row - 1][total - last] * reduced_word_count(_k, last);
          }
        }
      }
      _table.push_back(std::move(counts));
    }
    return _table[f][t];
  }

 private:
  std::size_t _k, _max;
  std::vector<std::vector<BigCount>> _table;
};

BigCount power(BigCount base, std::size_t e) {
  BigCount r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= base;
  }
  return r;
}

BigCount reduced_word_rank(Letters const& w, std::size_t k) {
  BigCount rank = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t digit = w[i].rank();
    if (i > 0) {
      std::size_t forbidden = w[i - 1].inverse().rank();
      if (forbidden < digit) {
        --digit;
      }
      rank = rank * (2 * k - 1) + digit;
    } else {
      rank = digit;
    }
  }
  return rank;
}

}  // namespace

BigCount products_of_size(Presentation const& p, std::size_t size) {
  if (size == 0) {
    return 1;
  }
  std::size_t choices = 2 * p.relators().size();
  TupleCounts tuples(p.num_generators(), size);
  BigCount total = 0;
  for (std::size_t f = 1; f <= size; ++f) {
    total += power(choices, f) * tuples.get(f, size - f);
  }
  return total;
}

BigCount product_rank(Presentation const& p, ConjugateProduct const& product) {
  std::size_t size = product.size();
  std::size_t f = product.factors.size();
  std::size_t k = p.num_generators();
  BigCount choices = 2 * p.relators().size();
  TupleCounts tuples(k, size);

  BigCount rank = 0;
  for (std::size_t s = 0; s < size; ++s) {
    rank += products_of_size(p, s);
  }
  if (f == 0) {
    return rank;
  }
  for (std::size_t g = 1; g < f; ++g) {
    rank += power(choices, g) * tuples.get(g, size - g);
  }
  // Length vectors lexicographically below this one.
  BigCount per_tuple = power(choices, f);
  BigCount prefix = 1;
  std::size_t used = 0;
  std::size_t total = size - f;
  for (std::size_t i = 0; i < f; ++i) {
    std::size_t length = product.factors[i].conjugator.size();
    for (std::size_t smaller = 0; smaller < length; ++smaller) {
      if (used + smaller > total) {
        break;
      }
      rank += per_tuple * prefix * reduced_word_count(k, smaller) *
              tuples.get(f - i - 1, total - used - smaller);
    }
    prefix *= reduced_word_count(k, length);
    used += length;
  }
  // Position within the fixed length vector, last factor fastest.
  BigCount within = 0;
  for (auto const& factor : product.factors) {
    BigCount radix = reduced_word_count(k, factor.conjugator.size()) * choices;
    BigCount digit = reduced_word_rank(factor.conjugator, k) * choices +
                     2 * factor.relator + (factor.sign < 0 ? 1 : 0);
    within = within * radix + digit;
  }
  return rank + within;
}

bool witness_check(Presentation const& p, std::span<Letter const> g,
                   SubgroupWord const& u, ConjugateProduct const& product) {
  Letters lhs = concat_reduced(invert(g), u.value);
  return lhs == product_value(p, product);
}

}  // namespace sgm
