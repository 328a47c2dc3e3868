#include "frattini/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "frattini/caps.hpp"

namespace frattini {

Permutation::Permutation(int degree) {
  if (degree < 1) throw GroupError("permutation degree must be at least 1");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> zero_based_images) {
  const int n = static_cast<int>(zero_based_images.size());
  if (n < 1) throw GroupError("permutation degree must be at least 1");
  std::vector<bool> seen(n, false);
  for (int img : zero_based_images) {
    if (img < 0 || img >= n) throw GroupError("permutation image out of range");
    if (seen[img]) throw GroupError("permutation images are not a bijection");
    seen[img] = true;
  }
  Permutation p(n);
  p.images_ = std::move(zero_based_images);
  return p;
}

Permutation Permutation::from_one_based_images(const std::vector<int>& images) {
  std::vector<int> shifted(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) shifted[i] = images[i] - 1;
  return from_images(std::move(shifted));
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& one_based_cycles) {
  if (degree < 1) throw GroupError("permutation degree must be at least 1");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : one_based_cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw GroupError("cycle point out of range 1.." + std::to_string(degree));
      if (used[from - 1]) throw GroupError("point repeated across cycles");
      used[from - 1] = true;
      img[from - 1] = to - 1;
    }
  }
  return from_images(std::move(img));
}

Permutation Permutation::parse_cycles(int degree, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw GroupError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw GroupError("expected point number in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) throw GroupError("unterminated cycle: " + text);
    ++i;  // ')'
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::first_moved() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return -1;
}

std::uint64_t Permutation::element_order() const {
  std::uint64_t order = 1;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(degree());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p(degree());
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw GroupError("permutation degree mismatch in product");
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[i] = rhs.images_[images_[i]];
  Permutation p(degree());
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::conjugated_by(const Permutation& x) const {
  return x.inverse() * (*this) * x;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PermHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace frattini
