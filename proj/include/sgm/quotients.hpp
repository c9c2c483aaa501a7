// Homomorphisms from a finitely presented group into symmetric groups: the
// finite-quotient side of the membership semi-decider.
//
// Every finite quotient Q embeds in Sym(|Q|) by its regular representation,
// so enumerating homomorphisms into Sym(1), Sym(2), ... reaches every finite
// quotient.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "sgm/perm_group.hpp"
#include "sgm/permutation.hpp"
#include "sgm/presentations.hpp"

namespace sgm {

class InvalidRepresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Image of w under the assignment generator i -> images[i].
Permutation evaluate(std::span<Permutation const> images, std::size_t degree,
                     std::span<Letter const> w);
bool is_homomorphism(Presentation const& p, std::span<Permutation const> images,
                     std::size_t degree);

// A verified homomorphism from <A | R> to Sym(degree).
class PermRep {
 public:
  // Throws InvalidRepresentation if a relator does not map to the identity.
  PermRep(std::shared_ptr<Presentation const> presentation, std::size_t degree,
          std::vector<Permutation> images);

  std::shared_ptr<Presentation const> const& presentation() const noexcept {
    return _presentation;
  }
  std::size_t degree() const noexcept { return _degree; }
  std::vector<Permutation> const& images() const noexcept { return _images; }

  Permutation evaluate(Word const& w) const;
  Permutation evaluate(std::span<Letter const> w) const;

  friend bool operator==(PermRep const& x, PermRep const& y) {
    return x._degree == y._degree && x._images == y._images;
  }

 private:
  std::shared_ptr<Presentation const> _presentation;
  std::size_t _degree;
  std::vector<Permutation> _images;
  std::vector<Permutation> _inverses;
};

Permutation evaluate(PermRep const& rep, Word const& w);

// Resumable backtracking search over generator-image tuples of a fixed
// degree in lexicographic order (generator 0's one-line images most
// significant). Points are assigned one at a time; a partial assignment is
// rejected as soon as tracing some relator from some point provably fails to
// return to that point.
class QuotientEnumerator {
 public:
  enum class Status { working, found, exhausted };

  QuotientEnumerator(std::shared_ptr<Presentation const> presentation,
                     std::size_t degree);
  // Restricts the search to tuples whose first generator maps to `first`.
  QuotientEnumerator(std::shared_ptr<Presentation const> presentation,
                     std::size_t degree, Permutation const& first);

  // One unit of work: a single candidate image for a single point.
  Status step();
  // Runs until the next representation or exhaustion.
  std::optional<PermRep> next();

  // Valid after step() returned found.
  PermRep current() const;
  std::size_t degree() const noexcept { return _degree; }
  std::uint64_t units() const noexcept { return _units; }

 private:
  bool consistent(std::size_t generator) const;
  void assign(std::size_t slot, Point value);
  void unassign(std::size_t slot);

  std::shared_ptr<Presentation const> _presentation;
  std::size_t _degree;
  std::size_t _generators;
  std::size_t _slots;
  std::size_t _fixed = 0;  // leading slots pinned by the partition
  // _forward[x][p] / _backward[x][p]: image / preimage of p under x, or -1.
  std::vector<std::vector<int>> _forward, _backward;
  std::vector<Point> _next_value;  // per slot, next candidate to try
  std::size_t _depth = 0;
  bool _pending_backtrack = false;
  bool _exhausted = false;
  std::uint64_t _units = 0;
  // Relators containing each generator.
  std::vector<std::vector<std::size_t>> _relators_by_generator;
};

using RepVisitor = std::function<bool(PermRep const&)>;

// Serial reference: visits every homomorphism to Sym(degree) in
// lexicographic order until the visitor returns false. Returns the number
// visited.
std::size_t enumerate_quotients(std::shared_ptr<Presentation const> p,
                                std::size_t degree, RepVisitor const& visitor);
std::vector<PermRep> all_quotients(std::shared_ptr<Presentation const> p,
                                   std::size_t degree);

// Partitions the search by the image of the first generator and runs the
// partitions with OpenMP; the result is concatenated back into the serial
// order.
std::vector<PermRep> all_quotients_parallel(std::shared_ptr<Presentation const> p,
                                            std::size_t degree);

// Does the image of g lie in the image of <S> under rep?
bool image_in_subgroup(PermRep const& rep, std::vector<Letters> const& subgroup,
                       std::span<Letter const> g);

struct QuotientScan {
  std::size_t representations = 0;
  std::size_t separating = 0;
  std::optional<std::size_t> first_separating;  // position in serial order
};

// Tallies the homomorphisms of each degree in [1, max_degree] whose image of
// g avoids the image of <S>.
QuotientScan scan_quotients(std::shared_ptr<Presentation const> p,
                            std::vector<Letters> const& subgroup,
                            std::span<Letter const> g, std::size_t max_degree);
QuotientScan scan_quotients_parallel(std::shared_ptr<Presentation const> p,
                                     std::vector<Letters> const& subgroup,
                                     std::span<Letter const> g,
                                     std::size_t max_degree);

}  // namespace sgm
