#include "sgm/permutation.hpp"

#include <numeric>
#include <sstream>

namespace sgm {

bool is_permutation(std::span<Point const> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) {
      return false;
    }
    seen[p] = true;
  }
  return true;
}

Permutation::Permutation(std::size_t degree) : _images(degree) {
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : _images(std::move(images)) {
  if (!is_permutation(_images)) {
    throw std::invalid_argument("images do not form a permutation");
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (auto const& cycle : cycles) {
    std::vector<Point> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]]) {
        throw std::invalid_argument("cycles must be disjoint and within degree");
      }
      used[c[i]] = true;
      p._images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(degree());
  for (std::size_t i = 0; i < _images.size(); ++i) {
    inv._images[_images[i]] = static_cast<Point>(i);
  }
  return inv;
}

Permutation operator*(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("degree mismatch in permutation product");
  }
  Permutation r(p.degree());
  for (std::size_t i = 0; i < p._images.size(); ++i) {
    r._images[i] = q._images[p._images[i]];
  }
  return r;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || _images[start] == start) {
      continue;
    }
    any = true;
    out << '(';
    Point p = start;
    bool first = true;
    do {
      seen[p] = true;
      out << (first ? "" : " ") << p + 1;
      first = false;
      p = _images[p];
    } while (p != start);
    out << ')';
  }
  return any ? out.str() : "()";
}

std::string Permutation::to_one_line() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < _images.size(); ++i) {
    out << (i ? ", " : "") << _images[i];
  }
  out << ']';
  return out.str();
}

}  // namespace sgm
