// Permutations of {0, ..., degree-1}.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgm {

using Point = std::uint32_t;

// Points are acted on from the right: (p * q) applies p first, then q, so a
// word evaluates letter by letter from left to right.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  // Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const noexcept { return _images.size(); }
  Point operator[](Point p) const { return _images[p]; }
  std::vector<Point> const& images() const noexcept { return _images; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  friend Permutation operator*(Permutation const& p, Permutation const& q);

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const& x, Permutation const& y) {
    return x._images <=> y._images;
  }

  // Cycle notation with 1-based points, "()" for the identity.
  std::string to_cycles() const;
  // 0-based one-line notation "[1, 0, 2]".
  std::string to_one_line() const;

 private:
  std::vector<Point> _images;
};

bool is_permutation(std::span<Point const> images);

}  // namespace sgm
