#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vanprop/partition.hpp"

namespace vanprop {

using Point = uint16_t;

/// Permutation of {0, ..., degree-1} in image-list form.
class Perm {
 public:
  Perm() = default;
  explicit Perm(size_t degree);  // identity
  static Perm from_images(std::vector<Point> images);  // validates bijectivity
  static Perm from_cycles(size_t degree, const std::vector<std::vector<Point>>& cycles);

  size_t degree() const { return img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  /// (a.after(b))(x) = a(b(x))
  Perm after(const Perm& b) const;
  Perm inverse() const;
  bool is_identity() const;
  long order() const;
  Partition cycle_type() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string str() const;  // cycle notation, e.g. "(0 1 2)(3 4)"

 private:
  std::vector<Point> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace vanprop
