// Permutations of {0, ..., degree-1} stored as image vectors.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sigmaforge {

// Immutable permutation.  Composition convention: (a * b) means "apply a,
// then b", i.e. (a * b)[i] == b[a[i]].  Degree is fixed at construction and
// capped at 255 so images fit in a byte.
class Perm {
 public:
  Perm() = default;  // degree-0 placeholder
  explicit Perm(std::vector<std::uint8_t> images);  // validates bijectivity
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[static_cast<size_t>(i)]; }
  bool is_identity() const;
  long order() const;  // lcm of cycle lengths

  Perm operator*(const Perm& rhs) const;  // apply *this, then rhs
  Perm inverse() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  // Disjoint-cycle form, fixed points omitted, smallest point first in each
  // cycle, cycles ordered by smallest point.  Identity renders as "()".
  std::string cycle_string() const;

  // Parses cycle notation like "(0 1 2)(3 4)" against a fixed degree.
  // `line` seeds error positions.  Commas are accepted as separators.
  static Perm parse_cycles(const std::string& text, int degree, int line = 0);

  const std::vector<std::uint8_t>& images() const { return img_; }

 private:
  std::vector<std::uint8_t> img_;
};

}  // namespace sigmaforge
