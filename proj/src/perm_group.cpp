#include "sgm/perm_group.hpp"

#include <stdexcept>

namespace sgm {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : _degree(degree), _generators(std::move(generators)) {
  for (auto const& g : _generators) {
    if (g.degree() != _degree) {
      throw std::invalid_argument("generator degree differs from group degree");
    }
  }
  for (auto const& g : _generators) {
    auto [residue, level] = strip(g, 0);
    if (!residue.is_identity()) {
      add_strong_generator(0, g);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation p,
                                                     std::size_t first) const {
  for (std::size_t i = first; i < _levels.size(); ++i) {
    auto const& level = _levels[i];
    Point beta = p[level.base_point];
    if (!level.transversal[beta]) {
      return {std::move(p), i};
    }
    p = p * level.transversal[beta]->inverse();
  }
  return {std::move(p), _levels.size()};
}

void PermGroup::extend_orbit(Level& level) {
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point beta = level.orbit[i];
    for (auto const& s : level.generators) {
      Point image = s[beta];
      if (!level.transversal[image]) {
        level.transversal[image] = *level.transversal[beta] * s;
        level.orbit.push_back(image);
      }
    }
  }
}

// Adds g to the generators of stabiliser level `index` and restores the
// invariant that every Schreier generator of that level strips to the
// identity through the levels below.
void PermGroup::add_strong_generator(std::size_t index, Permutation const& g) {
  if (index == _levels.size()) {
    Point moved = 0;
    while (g[moved] == moved) {
      ++moved;
    }
    Level fresh{moved, {}, std::vector<std::optional<Permutation>>(_degree), {moved}};
    fresh.transversal[moved] = Permutation(_degree);
    _levels.push_back(std::move(fresh));
  }
  _levels[index].generators.push_back(g);
  extend_orbit(_levels[index]);

  bool changed = true;
  while (changed) {
    changed = false;
    // Copies: recursion below may reallocate _levels.
    auto orbit = _levels[index].orbit;
    auto generators = _levels[index].generators;
    for (Point beta : orbit) {
      for (auto const& s : generators) {
        auto const& level = _levels[index];
        Permutation schreier =
            *level.transversal[beta] * s * level.transversal[s[beta]]->inverse();
        auto [residue, dropped] = strip(std::move(schreier), index + 1);
        if (!residue.is_identity()) {
          add_strong_generator(index + 1, residue);
          changed = true;
        }
      }
    }
  }
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (auto const& level : _levels) {
    b.push_back(level.base_point);
  }
  return b;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> all;
  for (auto const& level : _levels) {
    all.insert(all.end(), level.generators.begin(), level.generators.end());
  }
  return all;
}

boost::multiprecision::cpp_int PermGroup::order() const {
  boost::multiprecision::cpp_int n = 1;
  for (auto const& level : _levels) {
    n *= level.orbit.size();
  }
  return n;
}

bool PermGroup::contains(Permutation const& p) const {
  if (p.degree() != _degree) {
    throw std::invalid_argument("degree mismatch in membership test");
  }
  return strip(p, 0).first.is_identity();
}

PermGroup schreier_sims(std::size_t degree, std::vector<Permutation> generators) {
  return PermGroup(degree, std::move(generators));
}

bool perm_member(PermGroup const& group, Permutation const& p) {
  return group.contains(p);
}

}  // namespace sgm
