#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace mombin {

/// Histogram shape: the bin counts v_1..v_Ks, trimmed after the last
/// occupied bin. Interior zero bins are allowed.
struct Shape {
  std::vector<int> counts;

  Shape() = default;
  explicit Shape(std::vector<int> c) : counts(std::move(c)) {}
  Shape(std::initializer_list<int> c) : counts(c) {}

  int bins() const { return static_cast<int>(counts.size()); }
  int total() const;
  int operator[](std::size_t k) const { return counts[k]; }

  /// v_1 >= 1, v_Ks >= 1, no negative counts.
  bool well_formed() const;
  bool is_palindrome() const;

  /// "1,2,3"
  std::string str() const;

  friend bool operator==(const Shape&, const Shape&) = default;
  /// Canonical order: fewer bins first, then lexicographic counts.
  friend std::strong_ordering operator<=>(const Shape& a, const Shape& b) {
    if (a.counts.size() != b.counts.size()) return a.counts.size() <=> b.counts.size();
    return a.counts <=> b.counts;
  }
};

}  // namespace mombin
