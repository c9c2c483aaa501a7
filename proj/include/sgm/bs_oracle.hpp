// Exact word problem for the Baumslag-Solitar groups
// BS(m, n) = <a, b | a^-1 b^m a = b^n> by Britton's lemma, and the induced
// membership test for the fibre product of two copies of F(a, b) over BS(m, n).
#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgm/presentations.hpp"

namespace sgm {

using BigInt = boost::multiprecision::cpp_int;

class BSGroup {
 public:
  // Throws std::invalid_argument if m or n is zero.
  BSGroup(long m, long n);

  long m() const noexcept { return _m; }
  long n() const noexcept { return _n; }
  // {a, b}; a is the stable letter.
  AlphabetPtr const& alphabet() const noexcept { return _alphabet; }
  // <a, b | a^-1 b^m a b^-n>
  Presentation presentation() const;

 private:
  long _m, _n;
  AlphabetPtr _alphabet;
};

// One syllable of a word in syllable form: a^+-1 or b^k with k != 0.
struct Syllable {
  bool stable;
  BigInt exponent;

  friend bool operator==(Syllable const&, Syllable const&) = default;
};

// Free and pinch reduction to a Britton-reduced syllable sequence. Pinches
// a^-1 b^k a (m | k) -> b^(kn/m) and a b^k a^-1 (n | k) -> b^(km/n) are
// applied at the leftmost position where one appears while scanning.
// Throws AlphabetMismatch unless w is over {a, b}.
std::vector<Syllable> britton_normal_form(BSGroup const& g, Word const& w);

// No pinch and no adjacent syllables that cancel or merge.
bool is_britton_reduced(BSGroup const& g, std::vector<Syllable> const& s);

// britton_normal_form spelled out as a word; throws std::overflow_error if a
// b-exponent exceeds 10^6 in absolute value.
Word britton_reduce(BSGroup const& g, Word const& w);

bool bs_is_identity(BSGroup const& g, Word const& w);

// (w1, w2) lies in the preimage of the diagonal of BS(m,n) x BS(m,n) under
// the quotient F(a,b) x F(a,b) -> BS(m,n) x BS(m,n).
bool fiber_member_oracle(BSGroup const& g, Word const& w1, Word const& w2);

}  // namespace sgm
