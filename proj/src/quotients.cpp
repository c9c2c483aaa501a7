#include "sgm/quotients.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace sgm {

Permutation evaluate(std::span<Permutation const> images, std::size_t degree,
                     std::span<Letter const> w) {
  std::vector<Permutation> inverses;
  inverses.reserve(images.size());
  for (auto const& p : images) {
    inverses.push_back(p.inverse());
  }
  std::vector<Point> out(degree);
  for (Point start = 0; start < degree; ++start) {
    Point q = start;
    for (Letter x : w) {
      q = x.is_inverse() ? inverses[x.index()][q] : images[x.index()][q];
    }
    out[start] = q;
  }
  return Permutation(std::move(out));
}

bool is_homomorphism(Presentation const& p, std::span<Permutation const> images,
                     std::size_t degree) {
  if (images.size() != p.num_generators()) {
    return false;
  }
  for (auto const& img : images) {
    if (img.degree() != degree) {
      return false;
    }
  }
  for (auto const& r : p.relators()) {
    if (!evaluate(images, degree, r).is_identity()) {
      return false;
    }
  }
  return true;
}

PermRep::PermRep(std::shared_ptr<Presentation const> presentation,
                 std::size_t degree, std::vector<Permutation> images)
    : _presentation(std::move(presentation)),
      _degree(degree),
      _images(std::move(images)) {
  if (!_presentation) {
    throw InvalidRepresentation("representation needs a presentation");
  }
  if (_degree == 0) {
    throw InvalidRepresentation("degree must be positive");
  }
  if (!is_homomorphism(*_presentation, _images, _degree)) {
    throw InvalidRepresentation("generator images do not satisfy the relators");
  }
  for (auto const& p : _images) {
    _inverses.push_back(p.inverse());
  }
}

Permutation PermRep::evaluate(std::span<Letter const> w) const {
  std::vector<Point> out(_degree);
  for (Point start = 0; start < _degree; ++start) {
    Point q = start;
    for (Letter x : w) {
      q = x.is_inverse() ? _inverses[x.index()][q] : _images[x.index()][q];
    }
    out[start] = q;
  }
  return Permutation(std::move(out));
}

Permutation PermRep::evaluate(Word const& w) const {
  if (!same_alphabet(*w.alphabet(), *_presentation->alphabet())) {
    throw AlphabetMismatch("word is not over the representation's alphabet");
  }
  return evaluate(w.letters());
}

Permutation evaluate(PermRep const& rep, Word const& w) { return rep.evaluate(w); }

QuotientEnumerator::QuotientEnumerator(std::shared_ptr<Presentation const> presentation,
                                       std::size_t degree)
    : _presentation(std::move(presentation)),
      _degree(degree),
      _generators(_presentation->num_generators()),
      _slots(_generators * degree),
      _forward(_generators, std::vector<int>(degree, -1)),
      _backward(_generators, std::vector<int>(degree, -1)),
      _next_value(_slots + 1, 0),
      _relators_by_generator(_generators) {
  if (degree == 0) {
    throw std::invalid_argument("degree must be positive");
  }
  auto const& relators = _presentation->relators();
  for (std::size_t r = 0; r < relators.size(); ++r) {
    for (Letter x : relators[r]) {
      auto& list = _relators_by_generator[x.index()];
      if (list.empty() || list.back() != r) {
        list.push_back(r);
      }
    }
  }
  // A relator-free generator-less presentation still has the trivial map.
  if (_slots == 0) {
    _fixed = 0;
  }
}

QuotientEnumerator::QuotientEnumerator(std::shared_ptr<Presentation const> presentation,
                                       std::size_t degree, Permutation const& first)
    : QuotientEnumerator(std::move(presentation), degree) {
  if (_generators == 0 || first.degree() != degree) {
    throw std::invalid_argument("partition image does not fit the presentation");
  }
  for (Point p = 0; p < degree; ++p) {
    assign(p, first[p]);
  }
  _fixed = degree;
  _depth = degree;
  if (!consistent(0)) {
    _exhausted = true;
  }
}

void QuotientEnumerator::assign(std::size_t slot, Point value) {
  std::size_t x = slot / _degree;
  std::size_t p = slot % _degree;
  _forward[x][p] = static_cast<int>(value);
  _backward[x][value] = static_cast<int>(p);
}

void QuotientEnumerator::unassign(std::size_t slot) {
  std::size_t x = slot / _degree;
  std::size_t p = slot % _degree;
  _backward[x][static_cast<std::size_t>(_forward[x][p])] = -1;
  _forward[x][p] = -1;
}

bool QuotientEnumerator::consistent(std::size_t generator) const {
  auto apply = [this](Letter x, int q) {
    return x.is_inverse() ? _backward[x.index()][static_cast<std::size_t>(q)]
                          : _forward[x.index()][static_cast<std::size_t>(q)];
  };
  auto const& relators = _presentation->relators();
  for (std::size_t r : _relators_by_generator[generator]) {
    auto const& rel = relators[r];
    std::size_t length = rel.size();
    for (std::size_t s = 0; s < _degree; ++s) {
      int f = static_cast<int>(s);
      std::size_t fwd = 0;
      while (fwd < length) {
        int n = apply(rel[fwd], f);
        if (n < 0) {
          break;
        }
        f = n;
        ++fwd;
      }
      if (fwd == length) {
        if (f != static_cast<int>(s)) {
          return false;
        }
        continue;
      }
      int b = static_cast<int>(s);
      std::size_t bwd = length;
      while (bwd > fwd) {
        int n = apply(rel[bwd - 1].inverse(), b);
        if (n < 0) {
          break;
        }
        b = n;
        --bwd;
      }
      if (bwd == fwd && b != f) {
        return false;
      }
    }
  }
  return true;
}

QuotientEnumerator::Status QuotientEnumerator::step() {
  if (_exhausted) {
    return Status::exhausted;
  }
  if (_pending_backtrack) {
    _pending_backtrack = false;
    if (_depth == _fixed) {
      _exhausted = true;
      return Status::exhausted;
    }
    --_depth;
    unassign(_depth);
  } else if (_depth == _slots) {
    // Nothing left to choose: the pinned prefix is the whole assignment.
    _pending_backtrack = true;
    return Status::found;
  }
  while (true) {
    std::size_t slot = _depth;
    std::size_t x = slot / _degree;
    Point v = _next_value[slot];
    while (v < _degree && _backward[x][v] >= 0) {
      ++v;
    }
    if (v == _degree) {
      _next_value[slot] = 0;
      if (_depth == _fixed) {
        _exhausted = true;
        return Status::exhausted;
      }
      --_depth;
      unassign(_depth);
      continue;
    }
    _next_value[slot] = v + 1;
    assign(slot, v);
    ++_units;
    if (!consistent(x)) {
      unassign(slot);
      return Status::working;
    }
    ++_depth;
    if (_depth == _slots) {
      _pending_backtrack = true;
      return Status::found;
    }
    _next_value[_depth] = 0;
    return Status::working;
  }
}

std::optional<PermRep> QuotientEnumerator::next() {
  while (true) {
    switch (step()) {
      case Status::found:
        return current();
      case Status::exhausted:
        return std::nullopt;
      case Status::working:
        break;
    }
  }
}

PermRep QuotientEnumerator::current() const {
  std::vector<Permutation> images;
  images.reserve(_generators);
  for (std::size_t x = 0; x < _generators; ++x) {
    std::vector<Point> img(_degree);
    for (std::size_t p = 0; p < _degree; ++p) {
      img[p] = static_cast<Point>(_forward[x][p]);
    }
    images.emplace_back(std::move(img));
  }
  return PermRep(_presentation, _degree, std::move(images));
}

std::size_t enumerate_quotients(std::shared_ptr<Presentation const> p,
                                std::size_t degree, RepVisitor const& visitor) {
  QuotientEnumerator e(std::move(p), degree);
  std::size_t count = 0;
  while (auto rep = e.next()) {
    ++count;
    if (!visitor(*rep)) {
      break;
    }
  }
  return count;
}

std::vector<PermRep> all_quotients(std::shared_ptr<Presentation const> p,
                                   std::size_t degree) {
  std::vector<PermRep> reps;
  enumerate_quotients(std::move(p), degree, [&](PermRep const& rep) {
    reps.push_back(rep);
    return true;
  });
  return reps;
}

namespace {

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> perms;
  do {
    perms.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return perms;
}

}  // namespace

std::vector<PermRep> all_quotients_parallel(std::shared_ptr<Presentation const> p,
                                            std::size_t degree) {
  if (p->num_generators() == 0) {
    return all_quotients(std::move(p), degree);
  }
  auto firsts = all_permutations(degree);
  std::vector<std::vector<PermRep>> parts(firsts.size());
  auto n = static_cast<std::ptrdiff_t>(firsts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    QuotientEnumerator e(p, degree, firsts[static_cast<std::size_t>(i)]);
    while (auto rep = e.next()) {
      parts[static_cast<std::size_t>(i)].push_back(std::move(*rep));
    }
  }
  std::vector<PermRep> reps;
  for (auto& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(reps));
  }
  return reps;
}

bool image_in_subgroup(PermRep const& rep, std::vector<Letters> const& subgroup,
                       std::span<Letter const> g) {
  std::vector<Permutation> images;
  images.reserve(subgroup.size());
  for (auto const& s : subgroup) {
    images.push_back(rep.evaluate(s));
  }
  PermGroup group(rep.degree(), std::move(images));
  return group.contains(rep.evaluate(g));
}

QuotientScan scan_quotients(std::shared_ptr<Presentation const> p,
                            std::vector<Letters> const& subgroup,
                            std::span<Letter const> g, std::size_t max_degree) {
  QuotientScan scan;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    QuotientEnumerator e(p, d);
    while (auto rep = e.next()) {
      if (!image_in_subgroup(*rep, subgroup, g)) {
        if (!scan.first_separating) {
          scan.first_separating = scan.representations;
        }
        ++scan.separating;
      }
      ++scan.representations;
    }
  }
  return scan;
}

QuotientScan scan_quotients_parallel(std::shared_ptr<Presentation const> p,
                                     std::vector<Letters> const& subgroup,
                                     std::span<Letter const> g,
                                     std::size_t max_degree) {
  if (p->num_generators() == 0) {
    return scan_quotients(std::move(p), subgroup, g, max_degree);
  }
  QuotientScan scan;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    auto firsts = all_permutations(d);
    std::vector<QuotientScan> parts(firsts.size());
    auto n = static_cast<std::ptrdiff_t>(firsts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      auto& part = parts[static_cast<std::size_t>(i)];
      QuotientEnumerator e(p, d, firsts[static_cast<std::size_t>(i)]);
      while (auto rep = e.next()) {
        if (!image_in_subgroup(*rep, subgroup, g)) {
          if (!part.first_separating) {
            part.first_separating = part.representations;
          }
          ++part.separating;
        }
        ++part.representations;
      }
    }
    for (auto const& part : parts) {
      if (!scan.first_separating && part.first_separating) {
        scan.first_separating = scan.representations + *part.first_separating;
      }
      scan.representations += part.representations;
      scan.separating += part.separating;
    }
  }
  return scan;
}

}  // namespace sgm
