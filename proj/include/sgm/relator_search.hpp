// Enumerations behind the positive half of the membership semi-decider:
// words in the generators of a subgroup, and products of conjugates of
// relators (the normal closure of R), together with the free-equality check
// that ties them together.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgm/presentations.hpp"

namespace sgm {

using BigCount = boost::multiprecision::cpp_int;

// A sequence over S ∪ S^-1: +i selects generator i (1-based), -i its inverse.
struct SubgroupWord {
  std::vector<int> indices;
  Letters value;  // reduced product of the selected generator words

  friend bool operator==(SubgroupWord const&, SubgroupWord const&) = default;
};

Letters subgroup_word_value(std::vector<Letters> const& generators,
                            std::span<int const> indices);

// All finite sequences over S ∪ S^-1 by length, then lexicographically with
// s1 < s1^-1 < s2 < s2^-1 < ...
class SubgroupWordEnumerator {
 public:
  explicit SubgroupWordEnumerator(std::vector<Letters> generators);

  std::optional<SubgroupWord> next();
  std::uint64_t position() const noexcept { return _position; }

 private:
  std::vector<Letters> _generators;
  std::vector<std::size_t> _digits;  // symbol ranks of the next sequence
  bool _done = false;
  std::uint64_t _position = 0;
};

// The n-th item of SubgroupWordEnumerator; nullopt past the end (only when S
// is empty and n > 0).
std::optional<SubgroupWord> subgroup_word_at(std::vector<Letters> const& generators,
                                             std::uint64_t n);

struct ConjugateFactor {
  Letters conjugator;
  std::size_t relator;
  int sign;  // +1 or -1

  friend bool operator==(ConjugateFactor const&, ConjugateFactor const&) = default;
};

// Product over factors of conjugator * relator^sign * conjugator^-1.
struct ConjugateProduct {
  std::vector<ConjugateFactor> factors;

  std::size_t size() const;  // factor count + total conjugator length
  friend bool operator==(ConjugateProduct const&, ConjugateProduct const&) = default;
};

// Throws std::out_of_range on an invalid relator index.
Letters product_value(Presentation const& p, ConjugateProduct const& product);

// All conjugate products with reduced conjugators, ordered by size; within a
// size by factor count, then by the vector of conjugator lengths, then
// factor by factor on (conjugator, relator, sign) with + before -.
class RelatorProductEnumerator {
 public:
  // max_size bounds the product size (inclusive); nullopt for unbounded.
  RelatorProductEnumerator(std::shared_ptr<Presentation const> p,
                           std::optional<std::size_t> max_size);

  std::optional<ConjugateProduct> next();
  std::uint64_t position() const noexcept { return _position; }

 private:
  bool start_size_class();
  bool first_composition();
  bool next_composition();
  void reset_factors();
  bool advance_factors();

  std::shared_ptr<Presentation const> _presentation;
  std::optional<std::size_t> _max_size;
  std::size_t _relator_choices;  // 2 |R|
  std::size_t _letters;          // 2 |A|
  std::size_t _size = 0;
  std::size_t _factors = 0;
  std::vector<std::size_t> _lengths;
  std::vector<Letters> _conjugators;
  std::vector<std::size_t> _choices;  // 2*relator + (sign < 0)
  bool _started = false;
  bool _active = false;  // a size class is loaded
  bool _done = false;
  std::uint64_t _position = 0;
};

// Counting and ranking within the product order, with exact integers since
// the counts grow exponentially with size.
BigCount reduced_word_count(std::size_t alphabet_size, std::size_t length);
BigCount products_of_size(Presentation const& p, std::size_t size);
BigCount product_rank(Presentation const& p, ConjugateProduct const& product);

// Lexicographically next reduced word of the same length; false at the end.
bool next_reduced_word(Letters& w, std::size_t alphabet_size);
Letters first_reduced_word(std::size_t length);

// True iff g^-1 * u equals the value of the product in the free group.
bool witness_check(Presentation const& p, std::span<Letter const> g,
                   SubgroupWord const& u, ConjugateProduct const& product);

}  // namespace sgm
