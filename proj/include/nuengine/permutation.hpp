#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nuengine {

using Point = std::uint32_t;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of {0, ..., degree-1}. Products act on the right: in x * y,
/// x is applied first, so p^(xy) = (p^x)^y.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(
      std::size_t degree,
      std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  Permutation pow(long long e) const;
  bool is_identity() const;

  /// Smallest moved point, or degree() when the permutation is the identity.
  Point first_moved() const;

  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// x^y = y^-1 x y
Permutation conjugate(const Permutation& x, const Permutation& y);
/// [x,y] = x^-1 y^-1 x y
Permutation commutator(const Permutation& x, const Permutation& y);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace nuengine
