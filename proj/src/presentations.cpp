#include "sgm/presentations.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgm {

Presentation::Presentation(AlphabetPtr alphabet, std::vector<Letters> relators)
    : _alphabet(std::move(alphabet)) {
  for (auto& r : relators) {
    Word checked(_alphabet, free_reduce(r));
    if (checked.empty()) {
      throw std::invalid_argument("relators must be non-empty after reduction");
    }
    _relators.push_back(checked.letters());
  }
}

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<std::string> const& relators)
    : _alphabet(make_alphabet(std::move(generators))) {
  for (auto const& text : relators) {
    Word r = parse_word(text, _alphabet);
    if (r.empty()) {
      throw std::invalid_argument("relator \"" + text + "\" is trivial");
    }
    _relators.push_back(r.letters());
  }
}

GeneratingSet::GeneratingSet(std::shared_ptr<Presentation const> presentation,
                             std::vector<Letters> generators)
    : _presentation(std::move(presentation)) {
  if (!_presentation) {
    throw std::invalid_argument("generating set needs a presentation");
  }
  for (auto& g : generators) {
    _generators.push_back(
        Word(_presentation->alphabet(), free_reduce(g)).letters());
  }
}

std::size_t ProductPresentation::factor_of(std::size_t generator) const {
  for (std::size_t i = 0; i < _ranges.size(); ++i) {
    if (generator >= _ranges[i].first &&
        generator < _ranges[i].first + _ranges[i].count) {
      return i;
    }
  }
  throw std::out_of_range("generator index outside the product");
}

Word ProductPresentation::include(std::size_t factor, Word const& w) const {
  if (factor >= _factors.size()) {
    throw std::out_of_range("invalid factor index");
  }
  if (!same_alphabet(*w.alphabet(), *_factors[factor].alphabet())) {
    throw AlphabetMismatch("word is not over the factor's alphabet");
  }
  Letters out;
  out.reserve(w.size());
  for (Letter x : w.letters()) {
    out.push_back(
        Letter::generator(_ranges[factor].first + x.index(), x.is_inverse()));
  }
  return Word(_combined->alphabet(), std::move(out));
}

Word ProductPresentation::restrict_to(std::size_t factor, Word const& w) const {
  if (factor >= _factors.size()) {
    throw std::out_of_range("invalid factor index");
  }
  Word projected = project(*this, {factor}, w);
  Letters out;
  for (Letter x : projected.letters()) {
    out.push_back(
        Letter::generator(x.index() - _ranges[factor].first, x.is_inverse()));
  }
  return Word(_factors[factor].alphabet(), std::move(out));
}

ProductPresentation direct_product(std::vector<Presentation> const& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("direct product needs at least one factor");
  }
  std::vector<std::string> names;
  std::vector<FactorRange> ranges;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    ranges.push_back({names.size(), factors[i].num_generators()});
    for (auto const& name : factors[i].alphabet()->names()) {
      std::string chosen = name;
      while (std::find(names.begin(), names.end(), chosen) != names.end()) {
        chosen += "_" + std::to_string(i + 1);
      }
      names.push_back(chosen);
    }
  }
  std::vector<Letters> relators;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (auto const& r : factors[i].relators()) {
      Letters shifted;
      for (Letter x : r) {
        shifted.push_back(
            Letter::generator(ranges[i].first + x.index(), x.is_inverse()));
      }
      relators.push_back(std::move(shifted));
    }
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      for (std::size_t x = 0; x < ranges[i].count; ++x) {
        for (std::size_t y = 0; y < ranges[j].count; ++y) {
          auto gx = Letter::generator(ranges[i].first + x);
          auto gy = Letter::generator(ranges[j].first + y);
          relators.push_back({gx.inverse(), gy.inverse(), gx, gy});
        }
      }
    }
  }
  auto combined = std::make_shared<Presentation const>(
      make_alphabet(std::move(names)), std::move(relators));
  return ProductPresentation(factors, std::move(combined), std::move(ranges));
}

Word project(ProductPresentation const& p, std::set<std::size_t> const& keep,
             Word const& w) {
  for (auto i : keep) {
    if (i >= p.num_factors()) {
      throw std::out_of_range("invalid factor index " + std::to_string(i));
    }
  }
  if (!same_alphabet(*w.alphabet(), *p.combined()->alphabet())) {
    throw AlphabetMismatch("word is not over the product alphabet");
  }
  Letters kept;
  for (Letter x : w.letters()) {
    if (keep.contains(p.factor_of(x.index()))) {
      kept.push_back(x);
    }
  }
  return Word(w.alphabet(), free_reduce(kept));
}

Word pair_word(ProductPresentation const& p, Word const& first,
               Word const& second) {
  if (p.num_factors() != 2) {
    throw std::invalid_argument("pair_word needs a product of two factors");
  }
  return concat(p.include(0, first), p.include(1, second));
}

namespace {

void require_matching_factors(ProductPresentation const& p) {
  if (p.num_factors() != 2) {
    throw std::invalid_argument("expected a product of exactly two factors");
  }
  auto const& f = p.factors();
  if (!(f[0] == f[1])) {
    throw std::invalid_argument("factors of the product differ");
  }
}

}  // namespace

GeneratingSet diagonal_subgroup(ProductPresentation const& p) {
  require_matching_factors(p);
  auto const& factor = p.factors()[0];
  std::vector<Letters> gens;
  for (std::size_t i = 0; i < factor.num_generators(); ++i) {
    Word x(factor.alphabet(), {Letter::generator(i)});
    gens.push_back(pair_word(p, x, x).letters());
  }
  return GeneratingSet(p.combined(), std::move(gens));
}

GeneratingSet fiber_product_subgroup(Presentation const& domain,
                                     Presentation const& target,
                                     ProductPresentation* product_out) {
  if (!domain.is_free()) {
    throw std::invalid_argument("fiber product domain must be relator-free");
  }
  if (domain.alphabet()->names() != target.alphabet()->names()) {
    throw std::invalid_argument(
        "domain and target generator names differ; q must send generators to "
        "generators");
  }
  auto product = direct_product({domain, domain});
  GeneratingSet diagonal = diagonal_subgroup(product);
  std::vector<Letters> gens = diagonal.generators();
  Word identity(domain.alphabet());
  for (auto const& r : target.relators()) {
    gens.push_back(pair_word(product, Word(domain.alphabet(), r), identity).letters());
  }
  GeneratingSet result(product.combined(), std::move(gens));
  if (product_out) {
    *product_out = std::move(product);
  }
  return result;
}

}  // namespace sgm
