// Shared helpers for the unit tests: seeded random words and small
// independent reference computations.
#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "sgm/permutation.hpp"
#include "sgm/words.hpp"

namespace sgm::test {

inline std::mt19937& rng() {
  static std::mt19937 engine(20240607u);
  return engine;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

// Arbitrary (possibly unreduced) word of the given length.
inline Letters random_letters(std::size_t alphabet_size, std::size_t length) {
  Letters w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(Letter::from_rank(uniform(0, 2 * alphabet_size - 1)));
  }
  return w;
}

inline Letters random_reduced(std::size_t alphabet_size, std::size_t length) {
  Letters w;
  while (w.size() < length) {
    auto x = Letter::from_rank(uniform(0, 2 * alphabet_size - 1));
    if (w.empty() || x != w.back().inverse()) {
      w.push_back(x);
    }
  }
  return w;
}

// Free reduction by repeated deletion of the leftmost cancelling pair.
inline Letters naive_reduce(Letters w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1].inverse()) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline Letters join(Letters u, Letters const& v) {
  u.insert(u.end(), v.begin(), v.end());
  return u;
}

inline Letters naive_inverse(Letters w) {
  std::reverse(w.begin(), w.end());
  for (auto& x : w) {
    x = x.inverse();
  }
  return w;
}

inline Permutation random_permutation(std::size_t degree) {
  std::vector<Point> images(degree);
  for (Point i = 0; i < degree; ++i) {
    images[i] = i;
  }
  std::shuffle(images.begin(), images.end(), rng());
  return Permutation(images);
}

// Closure of a generating set under right multiplication.
inline std::set<std::vector<Point>> naive_closure(std::size_t degree,
                                                 std::vector<Permutation> const& gens) {
  std::set<std::vector<Point>> seen;
  std::vector<Permutation> frontier{Permutation(degree)};
  seen.insert(frontier[0].images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const& p : frontier) {
      for (auto const& g : gens) {
        auto q = p * g;
        if (seen.insert(q.images()).second) {
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace sgm::test
