// Finite presentations, direct products, projections and the fiber-product
// subgroup construction.
#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sgm/words.hpp"

namespace sgm {

// <A | R>. Relators are stored freely reduced and non-empty.
class Presentation {
 public:
  Presentation(AlphabetPtr alphabet, std::vector<Letters> relators);
  Presentation(std::vector<std::string> generators,
               std::vector<std::string> const& relators);

  AlphabetPtr const& alphabet() const noexcept { return _alphabet; }
  std::size_t num_generators() const noexcept { return _alphabet->size(); }
  std::vector<Letters> const& relators() const noexcept { return _relators; }
  Word relator(std::size_t i) const { return Word(_alphabet, _relators.at(i)); }
  bool is_free() const noexcept { return _relators.empty(); }

  Word word(std::string_view text) const { return parse_word(text, _alphabet); }

  friend bool operator==(Presentation const& x, Presentation const& y) {
    return *x._alphabet == *y._alphabet && x._relators == y._relators;
  }

 private:
  AlphabetPtr _alphabet;
  std::vector<Letters> _relators;
};

// A finite set S of words of a presentation; <S> is the subgroup it generates.
class GeneratingSet {
 public:
  GeneratingSet(std::shared_ptr<Presentation const> presentation,
                std::vector<Letters> generators);

  std::shared_ptr<Presentation const> const& presentation() const noexcept {
    return _presentation;
  }
  std::vector<Letters> const& generators() const noexcept { return _generators; }
  std::size_t size() const noexcept { return _generators.size(); }
  Word generator(std::size_t i) const {
    return Word(_presentation->alphabet(), _generators.at(i));
  }

 private:
  std::shared_ptr<Presentation const> _presentation;
  std::vector<Letters> _generators;
};

struct FactorRange {
  std::size_t first;  // index of the factor's first generator in combined
  std::size_t count;
};

class ProductPresentation {
 public:
  ProductPresentation(std::vector<Presentation> factors,
                      std::shared_ptr<Presentation const> combined,
                      std::vector<FactorRange> ranges)
      : _factors(std::move(factors)),
        _combined(std::move(combined)),
        _ranges(std::move(ranges)) {}

  std::vector<Presentation> const& factors() const noexcept { return _factors; }
  std::shared_ptr<Presentation const> const& combined() const noexcept {
    return _combined;
  }
  std::vector<FactorRange> const& ranges() const noexcept { return _ranges; }
  std::size_t num_factors() const noexcept { return _factors.size(); }
  // Factor owning a combined generator index.
  std::size_t factor_of(std::size_t generator) const;

  // Image of a factor word under the inclusion of factor i into the product.
  Word include(std::size_t factor, Word const& w) const;
  // Inverse of include on words supported in a single factor.
  Word restrict_to(std::size_t factor, Word const& w) const;

 private:
  std::vector<Presentation> _factors;
  std::shared_ptr<Presentation const> _combined;
  std::vector<FactorRange> _ranges;
};

// Name collisions are resolved by suffixing the 1-based factor index
// (a -> a_2). Cross-factor commutators are x^-1 y^-1 x y with x from the
// lower-indexed factor.
ProductPresentation direct_product(std::vector<Presentation> const& factors);

// Deletes letters of factors outside keep (0-based), then reduces.
Word project(ProductPresentation const& p, std::set<std::size_t> const& keep,
             Word const& w);

// Generators (a_i, a_i) and (r_j, 1) of (q x q)^-1(Delta) inside
// domain x domain, where q: domain -> target sends generators to generators.
GeneratingSet fiber_product_subgroup(Presentation const& domain,
                                     Presentation const& target,
                                     ProductPresentation* product_out = nullptr);

// {(a_i, a_i)} in a product of two identical factors.
GeneratingSet diagonal_subgroup(ProductPresentation const& p);

// Pair (w1, w2) of factor words as a single word of the product.
Word pair_word(ProductPresentation const& p, Word const& first,
               Word const& second);

}  // namespace sgm
