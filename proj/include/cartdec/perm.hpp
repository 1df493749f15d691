#ifndef CARTDEC_PERM_HPP
#define CARTDEC_PERM_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace cartdec {

using Point = std::uint32_t;

// A permutation of {0,...,degree-1}, stored as its image table.
// Permutations act on the right: x^(p*q) = (x^p)^q.
class Perm {
public:
  Perm() = default;
  explicit Perm(Point degree);                 // identity
  explicit Perm(std::vector<Point> images);    // validates bijection
  static Perm from_cycles(Point degree,
                          std::initializer_list<std::initializer_list<Point>> cycles);
  static Perm from_cycles(Point degree,
                          const std::vector<std::vector<Point>>& cycles);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  bool even() const;                           // parity via cycle count
  Point smallest_moved() const;                // degree if identity
  std::vector<Point> support() const;

  // restriction: identity outside [lo,hi), original images inside.
  // Requires the permutation to map [lo,hi) into itself.
  Perm restricted_to(Point lo, Point hi) const;
  bool maps_range_into(Point lo, Point hi) const;

  std::string cycle_string() const;

  friend Perm operator*(const Perm& p, const Perm& q);  // apply p, then q
  Perm& operator*=(const Perm& q);
  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  std::size_t hash() const;

private:
  std::vector<Point> images_;
};

// x^p, then conjugate q^p = p^-1 * q * p
Perm conjugate(const Perm& q, const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace cartdec

#endif
