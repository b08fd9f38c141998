#include "nuengine/permutation.hpp"

#include <numeric>
#include <sstream>

namespace nuengine {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw GroupError("permutation images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree,
    std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) continue;
    const Point* c = cycle.begin();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = c[i];
      Point to = c[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw GroupError("cycle point exceeds degree");
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw GroupError("degree mismatch in product");
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p)
    result.images_[p] = rhs.images_[images_[p]];
  return result;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (rhs.degree() != degree()) throw GroupError("degree mismatch in product");
  for (auto& img : images_) img = rhs.images_[img];
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p)
    result.images_[images_[p]] = static_cast<Point>(p);
  return result;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Permutation result(degree());
  while (n) {
    if (n & 1) result *= base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const { return first_moved() == degree(); }

Point Permutation::first_moved() const {
  for (std::size_t p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return static_cast<Point>(p);
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(degree(), false);
  for (std::size_t p = 0; p < degree(); ++p) {
    if (done[p] || images_[p] == p) continue;
    out << '(';
    Point q = static_cast<Point>(p);
    bool first = true;
    do {
      if (!first) out << ' ';
      out << q;
      done[q] = true;
      q = images_[q];
      first = false;
    } while (q != p);
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation conjugate(const Permutation& x, const Permutation& y) {
  return y.inverse() * x * y;
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  return x.inverse() * y.inverse() * x * y;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace nuengine
