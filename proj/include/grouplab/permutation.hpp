#ifndef GROUPLAB_PERMUTATION_HPP_
#define GROUPLAB_PERMUTATION_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "grouplab/error.hpp"

namespace grouplab {

using Point = std::uint32_t;

// A bijection of {1..n}. Points are stored 0-based; the text forms and
// from_images()/images() use the 1-based labels.
//
// Products are read left to right: compose(a, b) applies a first, then b.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    if (degree == 0) throw InvalidArgument("permutation degree must be positive");
    Permutation p;
    p.img_.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.img_[i] = static_cast<Point>(i);
    return p;
  }

  // images[i] is the image of point i + 1, 1-based.
  static Permutation from_images(const std::vector<Point>& images) {
    std::vector<Point> zero(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] == 0) throw InvalidArgument("image 0 is not a valid 1-based point");
      zero[i] = images[i] - 1;
    }
    return from_zero_based(std::move(zero));
  }

  static Permutation from_zero_based(std::vector<Point> images) {
    Permutation p;
    p.img_ = std::move(images);
    p.check_bijective();
    return p;
  }

  std::size_t degree() const noexcept { return img_.size(); }

  // Image of the 0-based point i.
  Point operator[](std::size_t i) const { return img_[i]; }

  const std::vector<Point>& zero_based() const noexcept { return img_; }

  std::vector<Point> images() const {
    std::vector<Point> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] != i) return false;
    }
    return true;
  }

  bool is_bijective() const {
    std::vector<bool> seen(img_.size(), false);
    for (Point x : img_) {
      if (x >= img_.size() || seen[x]) return false;
      seen[x] = true;
    }
    return !img_.empty();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  void check_bijective() const {
    if (img_.empty()) throw InvalidArgument("permutation degree must be positive");
    if (!is_bijective()) throw InvalidArgument("image table is not a bijection");
  }

  std::vector<Point> img_;
};

inline Permutation identity(std::size_t degree) { return Permutation::identity(degree); }

// Apply a, then b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                          std::to_string(b.degree()));
  }
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b[a[i]];
  return Permutation::from_zero_based(std::move(out));
}

inline Permutation inverse(const Permutation& a) {
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[a[i]] = static_cast<Point>(i);
  return Permutation::from_zero_based(std::move(out));
}

// Parses disjoint cycle notation such as "(1 2 4 7)(3 6 8 5)". Omitted points
// are fixed; "()" is the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw InvalidArgument("permutation degree must be positive");
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty cycle string");

  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("expected '(' at column " + std::to_string(pos + 1));
    }
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos == text.size()) throw ParseError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] < '0' || text[pos] > '9') {
        throw ParseError(std::string("unexpected character '") + text[pos] + "' at column " +
                         std::to_string(pos + 1));
      }
      std::uint64_t value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree + 1) value = degree + 1;  // saturate; reported as range error below
        ++pos;
      }
      if (value == 0 || value > degree) {
        throw InvalidArgument("point " + std::to_string(value) + " out of range 1.." +
                              std::to_string(degree));
      }
      const Point pt = static_cast<Point>(value - 1);
      if (used[pt]) throw ParseError("repeated point " + std::to_string(value));
      used[pt] = true;
      cycle.push_back(pt);
      if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != ')') {
        throw ParseError(std::string("unexpected character '") + text[pos] + "' at column " +
                         std::to_string(pos + 1));
      }
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation::from_zero_based(std::move(img));
}

// Canonical form: cycles ordered by smallest moved point, each starting at it.
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace grouplab

template <>
struct std::hash<grouplab::Permutation> {
  std::size_t operator()(const grouplab::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p.zero_based()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

#endif  // GROUPLAB_PERMUTATION_HPP_
