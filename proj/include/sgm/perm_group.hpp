// Permutation groups via a base and strong generating set (Schreier-Sims).
#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgm/permutation.hpp"

namespace sgm {

class PermGroup {
 public:
  // All generators must share `degree`.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return _degree; }
  std::vector<Permutation> const& generators() const noexcept { return _generators; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;

  boost::multiprecision::cpp_int order() const;
  // Throws std::invalid_argument on degree mismatch.
  bool contains(Permutation const& p) const;

 private:
  struct Level {
    Point base_point;
    std::vector<Permutation> generators;
    // transversal[beta] maps base_point to beta.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<Point> orbit;
  };

  // Residue of p after stripping through levels first..end and the level
  // where it dropped out.
  std::pair<Permutation, std::size_t> strip(Permutation p, std::size_t first) const;
  void add_strong_generator(std::size_t level, Permutation const& g);
  void extend_orbit(Level& level);

  std::size_t _degree;
  std::vector<Permutation> _generators;
  std::vector<Level> _levels;
};

PermGroup schreier_sims(std::size_t degree, std::vector<Permutation> generators);
bool perm_member(PermGroup const& group, Permutation const& p);

}  // namespace sgm
