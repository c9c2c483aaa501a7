// Finite quotients of free groups that tell two words apart, and their
// doubling to a direct square that separates a pair from the diagonal.
#pragma once

#include <memory>

#include "sgm/presentations.hpp"
#include "sgm/quotients.hpp"

namespace sgm {

// Reads the reduced word w along a path 0 -> 1 -> ... -> |w|, each letter
// giving one edge of its generator's partial injection, then completes every
// generator to a permutation of |w| + 1 points. The image of w sends 0 to |w|.
// Throws std::invalid_argument if w is empty or p has relators.
PermRep path_separation(std::shared_ptr<Presentation const> p, Word const& w);

// A representation with evaluate(alpha1) != evaluate(alpha2) of degree at most
// |w| + 1 for w = alpha1^-1 alpha2. Small symmetric groups (degree up to four)
// are searched first in enumeration order, so short words get the smallest
// such quotient; otherwise the path construction is used. Throws
// std::invalid_argument if the words are freely equal or p has relators.
PermRep separate_diagonal(std::shared_ptr<Presentation const> p, Word const& alpha1,
                          Word const& alpha2);

// phi x phi for phi = separate_diagonal(A, g1, g2), acting on two disjoint
// blocks: generators of the first factor move points [0, d), those of the
// second factor move [d, 2d). The image of the pair (g1, g2) lies outside the
// image of the diagonal subgroup.
struct ProductSeparation {
  ProductPresentation product;
  PermRep factor;  // phi
  PermRep rep;     // phi x phi on the combined presentation
};

ProductSeparation separate_from_product_diagonal(std::shared_ptr<Presentation const> p,
                                                 Word const& g1, Word const& g2);

}  // namespace sgm
