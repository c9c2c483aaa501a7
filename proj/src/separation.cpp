#include "sgm/separation.hpp"

#include <algorithm>

#include "sgm/stallings.hpp"

namespace sgm {

namespace {

constexpr std::size_t kSearchDegree = 4;

void require_free(Presentation const& p) {
  if (!p.is_free()) {
    throw std::invalid_argument("separation needs a free presentation");
  }
}

Letters difference(Presentation const& p, Word const& alpha1, Word const& alpha2) {
  if (!same_alphabet(*alpha1.alphabet(), *p.alphabet())) {
    throw AlphabetMismatch("word is not over the presentation's alphabet");
  }
  require_same_alphabet(alpha1, alpha2);
  Letters w = concat_reduced(invert(free_reduce(alpha1.letters())),
                             free_reduce(alpha2.letters()));
  if (w.empty()) {
    throw std::invalid_argument("the words are freely equal; no quotient separates them");
  }
  return w;
}

}  // namespace

PermRep path_separation(std::shared_ptr<Presentation const> p, Word const& w) {
  require_free(*p);
  if (!same_alphabet(*w.alphabet(), *p->alphabet())) {
    throw AlphabetMismatch("word is not over the presentation's alphabet");
  }
  Letters letters = free_reduce(w.letters());
  if (letters.empty()) {
    throw std::invalid_argument("path separation needs a nontrivial word");
  }
  std::size_t degree = letters.size() + 1;
  std::vector<std::vector<int>> maps(p->num_generators(),
                                     std::vector<int>(degree, kNoVertex));
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto& map = maps[letters[i].index()];
    if (letters[i].is_inverse()) {
      map[i + 1] = static_cast<int>(i);
    } else {
      map[i] = static_cast<int>(i + 1);
    }
  }
  complete_partial_injections(maps);
  std::vector<Permutation> images;
  for (auto const& map : maps) {
    images.emplace_back(std::vector<Point>(map.begin(), map.end()));
  }
  return PermRep(std::move(p), degree, std::move(images));
}

PermRep separate_diagonal(std::shared_ptr<Presentation const> p, Word const& alpha1,
                          Word const& alpha2) {
  require_free(*p);
  Letters w = difference(*p, alpha1, alpha2);
  std::size_t limit = std::min(w.size() + 1, kSearchDegree);
  for (std::size_t d = 2; d <= limit; ++d) {
    std::optional<PermRep> found;
    enumerate_quotients(p, d, [&](PermRep const& rep) {
      if (rep.evaluate(w).is_identity()) {
        return true;
      }
      found = rep;
      return false;
    });
    if (found) {
      return *found;
    }
  }
  return path_separation(p, Word(p->alphabet(), w));
}

ProductSeparation separate_from_product_diagonal(std::shared_ptr<Presentation const> p,
                                                 Word const& g1, Word const& g2) {
  PermRep phi = separate_diagonal(p, g1, g2);
  ProductPresentation product = direct_product({*p, *p});
  std::size_t d = phi.degree();
  std::vector<Permutation> images;
  for (std::size_t block = 0; block < 2; ++block) {
    for (auto const& image : phi.images()) {
      std::vector<Point> points(2 * d);
      for (Point q = 0; q < 2 * d; ++q) {
        points[q] = q;
      }
      for (Point q = 0; q < d; ++q) {
        points[block * d + q] = static_cast<Point>(block * d + image[q]);
      }
      images.emplace_back(std::move(points));
    }
  }
  PermRep rep(product.combined(), 2 * d, std::move(images));
  return ProductSeparation{std::move(product), std::move(phi), std::move(rep)};
}

}  // namespace sgm
