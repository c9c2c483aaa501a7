// The membership semi-decider: a finite-quotient search (process A) and a
// witness search in the normal closure of the relators (process B) run side
// by side under a step budget.
//
// Schedule: global step 2k runs the k-th unit of A and step 2k+1 the k-th
// cell of B. A unit is one candidate image for one point in the quotient
// ladder (degrees 1, 2, ..., max_degree). A cell is one pair (u_n, p_m) of
// the Cantor diagonal over subgroup words x relator products, visited as
// d = n + m = 0, 1, 2, ... and m = 0..d. Cells with n past the end of the
// subgroup-word stream (only possible for empty S) are skipped. A slot whose
// process has nothing left to do, and a cell whose m lies past the bounded
// product stream, still consume their step, so the step at which a given
// witness is found does not depend on max_degree or max_product_size.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "sgm/certificate.hpp"
#include "sgm/presentations.hpp"
#include "sgm/quotients.hpp"
#include "sgm/relator_search.hpp"

namespace sgm {

enum class Process { quotients, witnesses };

struct SolveOptions {
  // Runs the two processes on separate threads; the first verdict wins.
  // Verdicts stay sound but the certificate is no longer reproducible.
  bool concurrent = false;
  // Called once per consumed step in the sequential schedule.
  std::function<void(Process)> trace;
};

struct SolveStats {
  std::uint64_t steps = 0;
  std::uint64_t quotient_units = 0;     // candidate assignments tried
  std::uint64_t representations = 0;    // complete homomorphisms checked
  std::uint64_t cells = 0;              // diagonal cells visited
  std::uint64_t pairs_tested = 0;       // cells with both items present
  std::size_t degree = 0;               // degree being searched when stopped
  bool quotients_exhausted = false;
};

// Process A: homomorphisms to Sym(1), ..., Sym(max_degree) in enumeration
// order, each tested for image(g) outside image(<S>).
class QuotientLadder {
 public:
  enum class Status { working, separated, exhausted };

  QuotientLadder(std::shared_ptr<Presentation const> p, std::vector<Letters> subgroup,
                 Letters g, std::size_t max_degree);

  Status step();
  // Valid after step() returned separated.
  PermRep const& separating() const { return *_separating; }
  std::size_t degree() const noexcept { return _degree; }
  std::uint64_t units() const noexcept { return _units; }
  std::uint64_t representations() const noexcept { return _representations; }
  bool exhausted() const noexcept { return _exhausted; }

 private:
  std::shared_ptr<Presentation const> _presentation;
  std::vector<Letters> _subgroup;
  Letters _g;
  std::size_t _max_degree;
  std::size_t _degree = 1;
  std::optional<QuotientEnumerator> _enumerator;
  std::optional<PermRep> _separating;
  std::uint64_t _units = 0;
  std::uint64_t _representations = 0;
  bool _exhausted = false;
};

// Position of cell (n, m) on the full diagonal of N x N, and its inverse.
BigCount diagonal_index(BigCount const& n, BigCount const& m);
std::pair<std::uint64_t, std::uint64_t> diagonal_cell(std::uint64_t index);

// Process B: walks the diagonal testing reduce(g^-1 u_n) == value(p_m).
class DiagonalSearch {
 public:
  enum class Status { working, found, exhausted };

  DiagonalSearch(std::shared_ptr<Presentation const> p, std::vector<Letters> subgroup,
                 Letters g, std::size_t max_product_size);

  Status step();
  // Valid after step() returned found.
  MemberWitness const& witness() const { return *_witness; }
  std::uint64_t cells() const noexcept { return _cells; }
  std::uint64_t pairs_tested() const noexcept { return _pairs; }

 private:
  bool fetch_word(std::uint64_t n);
  bool fetch_product(std::uint64_t m);

  std::shared_ptr<Presentation const> _presentation;
  Letters _g_inverse;
  SubgroupWordEnumerator _words;
  RelatorProductEnumerator _products;
  // Items fetched so far; the target of u_n is reduce(g^-1 u_n).
  std::vector<SubgroupWord> _word_cache;
  std::vector<Letters> _targets;
  std::vector<ConjugateProduct> _product_cache;
  std::vector<Letters> _values;
  std::optional<std::uint64_t> _num_words, _num_products;
  std::uint64_t _d = 0, _m = 0;
  std::uint64_t _cells = 0, _pairs = 0;
  std::optional<MemberWitness> _witness;
  bool _exhausted = false;
};

// g is reduced first. Throws AlphabetMismatch if g is not over the
// presentation of S and std::invalid_argument for a non-positive budget
// field. Member and NonMember certificates always pass check_certificate.
// Completeness of the NonMember side needs the group to be residually free
// and <S> finitely presented, neither of which is checked.
Certificate solve(GeneratingSet const& subgroup, Word const& g, Budget const& budget,
                  SolveOptions const& options = {}, SolveStats* stats = nullptr);

}  // namespace sgm
