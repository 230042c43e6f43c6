#pragma once

#include <string>
#include <vector>

#include "repring/numeric.hpp"

namespace repring {

/// A permutation of {0..n-1}, stored as its image array.
class Perm {
 public:
  Perm() = default;
  explicit Perm(size_t degree);  // identity
  explicit Perm(std::vector<int> images);

  /// Parses disjoint-cycle notation, e.g. "(0 1 2)(3 4)". "()" or an empty
  /// string is the identity. Points may be separated by spaces or commas.
  static Perm from_cycles(const std::string& text, size_t min_degree = 0);

  size_t degree() const { return img_.size(); }
  int operator[](int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  /// (a.compose(b))(x) = a(b(x)).
  Perm compose(const Perm& b) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g * this * g^-1

  bool is_identity() const;
  unsigned long order() const;

  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, sorted
  std::string cycle_string() const;

  /// Pads with fixed points to a larger degree.
  Perm extended(size_t degree) const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

}  // namespace repring
