#include "sgm/engine.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace sgm {

QuotientLadder::QuotientLadder(std::shared_ptr<Presentation const> p,
                               std::vector<Letters> subgroup, Letters g,
                               std::size_t max_degree)
    : _presentation(std::move(p)),
      _subgroup(std::move(subgroup)),
      _g(std::move(g)),
      _max_degree(max_degree) {
  if (max_degree == 0) {
    throw std::invalid_argument("max_degree must be positive");
  }
}

QuotientLadder::Status QuotientLadder::step() {
  if (_separating) {
    return Status::separated;
  }
  if (_exhausted) {
    return Status::exhausted;
  }
  if (!_enumerator) {
    _enumerator.emplace(_presentation, _degree);
  }
  ++_units;
  switch (_enumerator->step()) {
    case QuotientEnumerator::Status::found: {
      ++_representations;
      auto rep = _enumerator->current();
      if (!image_in_subgroup(rep, _subgroup, _g)) {
        _separating = std::move(rep);
        return Status::separated;
      }
      return Status::working;
    }
    case QuotientEnumerator::Status::exhausted:
      _enumerator.reset();
      if (_degree == _max_degree) {
        _exhausted = true;
        return Status::exhausted;
      }
      ++_degree;
      return Status::working;
    case QuotientEnumerator::Status::working:
      break;
  }
  return Status::working;
}

BigCount diagonal_index(BigCount const& n, BigCount const& m) {
  BigCount d = n + m;
  return d * (d + 1) / 2 + m;
}

std::pair<std::uint64_t, std::uint64_t> diagonal_cell(std::uint64_t index) {
  std::uint64_t d = 0;
  while (index > d) {
    index -= d + 1;
    ++d;
  }
  return {d - index, index};
}

DiagonalSearch::DiagonalSearch(std::shared_ptr<Presentation const> p,
                               std::vector<Letters> subgroup, Letters g,
                               std::size_t max_product_size)
    : _presentation(p),
      _g_inverse(invert(g)),
      _words(std::move(subgroup)),
      _products(std::move(p), max_product_size) {}

bool DiagonalSearch::fetch_word(std::uint64_t n) {
  while (_word_cache.size() <= n) {
    if (_num_words) {
      return false;
    }
    auto w = _words.next();
    if (!w) {
      _num_words = _word_cache.size();
      return false;
    }
    _targets.push_back(concat_reduced(_g_inverse, w->value));
    _word_cache.push_back(std::move(*w));
  }
  return true;
}

bool DiagonalSearch::fetch_product(std::uint64_t m) {
  while (_product_cache.size() <= m) {
    if (_num_products) {
      return false;
    }
    auto p = _products.next();
    if (!p) {
      _num_products = _product_cache.size();
      return false;
    }
    _values.push_back(product_value(*_presentation, *p));
    _product_cache.push_back(std::move(*p));
  }
  return true;
}

DiagonalSearch::Status DiagonalSearch::step() {
  if (_witness) {
    return Status::found;
  }
  if (_exhausted) {
    return Status::exhausted;
  }
  while (true) {
    if (_num_words && _num_products &&
        _d + 2 > *_num_words + *_num_products) {
      _exhausted = true;
      return Status::exhausted;
    }
    std::uint64_t m_lo = 0;
    if (_num_words && _d >= *_num_words) {
      m_lo = _d - (*_num_words - 1);
    }
    if (_m < m_lo) {
      _m = m_lo;
    }
    if (_m > _d) {
      ++_d;
      _m = 0;
      continue;
    }
    std::uint64_t m = _m++;
    std::uint64_t n = _d - m;
    if (!fetch_word(n)) {
      continue;
    }
    ++_cells;
    if (!fetch_product(m)) {
      return Status::working;
    }
    ++_pairs;
    if (_targets[n] == _values[m]) {
      _witness = MemberWitness{_word_cache[n].indices, _product_cache[m]};
      return Status::found;
    }
    return Status::working;
  }
}

namespace {

Certificate member_certificate(MemberWitness w) {
  Certificate c;
  c.verdict = Verdict::member;
  c.member = std::move(w);
  return c;
}

Certificate non_member_certificate(PermRep const& rep) {
  Certificate c;
  c.verdict = Verdict::non_member;
  c.non_member = NonMemberWitness{rep.degree(), rep.images()};
  return c;
}

Certificate undecided_certificate(Budget const& budget) {
  Certificate c;
  c.verdict = Verdict::undecided;
  c.budget = budget;
  return c;
}

void fill_stats(SolveStats* stats, std::uint64_t steps, QuotientLadder const& a,
                DiagonalSearch const& b) {
  if (!stats) {
    return;
  }
  stats->steps = steps;
  stats->quotient_units = a.units();
  stats->representations = a.representations();
  stats->cells = b.cells();
  stats->pairs_tested = b.pairs_tested();
  stats->degree = a.degree();
  stats->quotients_exhausted = a.exhausted();
}

Certificate solve_concurrent(QuotientLadder& a, DiagonalSearch& b, Budget const& budget,
                             SolveStats* stats) {
  std::atomic<std::uint64_t> steps{0};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  std::optional<Certificate> result;
  auto publish = [&](Certificate c) {
    std::lock_guard lock(mutex);
    if (!result) {
      result = std::move(c);
      stop = true;
    }
  };
  std::atomic<int> running{2};
  auto finish = [&] {
    if (--running == 0) {
      stop = true;
    }
  };

  std::thread quotients([&] {
    while (!stop && steps.fetch_add(1) < budget.max_steps) {
      auto s = a.step();
      if (s == QuotientLadder::Status::separated) {
        publish(non_member_certificate(a.separating()));
        break;
      }
      if (s == QuotientLadder::Status::exhausted) {
        break;
      }
    }
    finish();
  });
  std::thread witnesses([&] {
    while (!stop && steps.fetch_add(1) < budget.max_steps) {
      auto s = b.step();
      if (s == DiagonalSearch::Status::found) {
        publish(member_certificate(b.witness()));
        break;
      }
      if (s == DiagonalSearch::Status::exhausted) {
        break;
      }
    }
    finish();
  });
  quotients.join();
  witnesses.join();
  fill_stats(stats, std::min<std::uint64_t>(steps.load(), budget.max_steps), a, b);
  return result ? *result : undecided_certificate(budget);
}

}  // namespace

Certificate solve(GeneratingSet const& subgroup, Word const& g, Budget const& budget,
                  SolveOptions const& options, SolveStats* stats) {
  budget.validate();
  auto const& p = subgroup.presentation();
  if (!same_alphabet(*g.alphabet(), *p->alphabet())) {
    throw AlphabetMismatch("word is not over the presentation's alphabet");
  }
  Letters target = free_reduce(g.letters());
  QuotientLadder a(p, subgroup.generators(), target, budget.max_degree);
  DiagonalSearch b(p, subgroup.generators(), target, budget.max_product_size);
  if (options.concurrent) {
    return solve_concurrent(a, b, budget, stats);
  }

  bool a_done = false, b_done = false;
  std::uint64_t step = 0;
  while (step < budget.max_steps && !(a_done && b_done)) {
    bool quotient_step = step % 2 == 0;
    ++step;
    if (options.trace) {
      options.trace(quotient_step ? Process::quotients : Process::witnesses);
    }
    if (quotient_step) {
      auto s = a.step();
      if (s == QuotientLadder::Status::separated) {
        fill_stats(stats, step, a, b);
        return non_member_certificate(a.separating());
      }
      a_done = s == QuotientLadder::Status::exhausted;
    } else {
      auto s = b.step();
      if (s == DiagonalSearch::Status::found) {
        fill_stats(stats, step, a, b);
        return member_certificate(b.witness());
      }
      b_done = s == DiagonalSearch::Status::exhausted;
    }
  }
  fill_stats(stats, step, a, b);
  return undecided_certificate(budget);
}

}  // namespace sgm
