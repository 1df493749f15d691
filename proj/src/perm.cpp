#include "cartdec/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cartdec {

Perm::Perm(Point degree) : images_(degree) {
  for (Point i = 0; i < degree; ++i) images_[i] = i;
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("Perm: image table is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(Point degree,
                       std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cc;
  for (auto& c : cycles) cc.emplace_back(c);
  return from_cycles(degree, cc);
}

Perm Perm::from_cycles(Point degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i) img[i] = i;
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from >= degree) throw std::invalid_argument("Perm: cycle point out of range");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

bool Perm::even() const {
  // parity = (moved points - cycles on moved points) mod 2
  std::vector<bool> seen(images_.size(), false);
  Point transpositions = 0;
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    Point len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions & 1u) == 0;
}

Point Perm::smallest_moved() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return degree();
}

std::vector<Point> Perm::support() const {
  std::vector<Point> s;
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) s.push_back(i);
  return s;
}

bool Perm::maps_range_into(Point lo, Point hi) const {
  for (Point i = lo; i < hi; ++i)
    if (images_[i] < lo || images_[i] >= hi) return false;
  return true;
}

Perm Perm::restricted_to(Point lo, Point hi) const {
  if (!maps_range_into(lo, hi))
    throw std::invalid_argument("Perm: restriction range is not invariant");
  Perm r(degree());
  for (Point i = lo; i < hi; ++i) r.images_[i] = images_[i];
  return r;
}

std::string Perm::cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    bool first = true;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j;
      first = false;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("Perm: degree mismatch in composition");
  std::vector<Point> img(p.degree());
  for (Point i = 0; i < p.degree(); ++i) img[i] = q.images_[p.images_[i]];
  Perm r;
  r.images_ = std::move(img);
  return r;
}

Perm& Perm::operator*=(const Perm& q) {
  *this = *this * q;
  return *this;
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;  // FNV-1a
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Perm conjugate(const Perm& q, const Perm& p) { return p.inverse() * q * p; }

}  // namespace cartdec
