#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace frattini {

// A bijection of the points 1..degree. Images are stored 0-based; all text
// I/O (disjoint cycle notation) is 1-based.
class Permutation {
 public:
  // The identity on `degree` points.
  explicit Permutation(int degree);

  static Permutation from_images(std::vector<int> zero_based_images);
  static Permutation from_one_based_images(const std::vector<int>& images);
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& one_based_cycles);
  // Parses "(1 2 3)(4 5)"; commas and arbitrary whitespace are accepted,
  // "()" is the identity.
  static Permutation parse_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  int first_moved() const;  // smallest moved point, -1 for the identity
  std::uint64_t element_order() const;

  Permutation inverse() const;
  // Composition "apply *this, then rhs": (a*b)[x] == b[a[x]].
  Permutation operator*(const Permutation& rhs) const;
  // x^-1 * (*this) * x
  Permutation conjugated_by(const Permutation& x) const;

  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// a^-1 * b^-1 * a * b
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace frattini
