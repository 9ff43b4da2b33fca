#include "vanprop/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vanprop/errors.hpp"

namespace vanprop {

Perm::Perm(size_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm Perm::from_images(std::vector<Point> images) {
  if (images.size() > 65535) throw InputError("permutation degree exceeds representable points");
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw InputError("permutation image list is not a bijection");
    seen[x] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Perm p(degree);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      Point from = cyc[i];
      Point to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree) throw InputError("cycle point out of range");
      p.img_[from] = to;
    }
  }
  return from_images(std::move(p.img_));  // revalidate (rejects overlapping cycles)
}

Perm Perm::after(const Perm& b) const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[b.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Partition Perm::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lengths;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

long Perm::order() const {
  long ord = 1;
  Partition type = cycle_type();
  for (int len : type.parts()) ord = std::lcm(ord, static_cast<long>(len));
  return ord;
}

std::string Perm::str() const {
  if (is_identity()) return "()";
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << '(';
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = img_[j];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace vanprop
