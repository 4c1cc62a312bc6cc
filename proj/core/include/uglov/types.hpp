#pragma once

// Partitions, multipartitions, charges and the node calculus of Young
// diagrams. Components and rows/columns are 1-based in every public function.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace uglov {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction; part(i) past the end reads as 0.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  static Partition row(int n);
  static Partition column(int n);

  /// 1-based; 0 for i beyond the last stored part.
  int part(int i) const noexcept {
    return i >= 1 && static_cast<std::size_t>(i) <= parts_.size() ? parts_[i - 1] : 0;
  }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int rank() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  std::span<const int> parts() const noexcept { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// An l-tuple of partitions, l >= 1.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  Multipartition(std::initializer_list<Partition> components);

  /// The multipartition (∅, ..., ∅) of level l.
  static Multipartition empty(int level);
  /// Partition p in component c (1-based), ∅ elsewhere.
  static Multipartition single(int level, int comp, Partition p);

  int level() const noexcept { return static_cast<int>(components_.size()); }
  int rank() const noexcept;
  bool is_empty() const noexcept;

  /// 1-based component access.
  const Partition& component(int c) const;
  std::span<const Partition> components() const noexcept { return components_; }

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> components_;
};

/// Multicharge s ∈ Z^l together with the order e >= 2 of the root of unity.
struct Charge {
  std::vector<int> s;
  int e = 2;

  Charge() = default;
  /// Throws InputError unless e >= 2 and s is non-empty.
  Charge(std::vector<int> s, int e);

  int level() const noexcept { return static_cast<int>(s.size()); }
  /// 1-based.
  int at(int c) const { return s.at(static_cast<std::size_t>(c - 1)); }

  friend bool operator==(const Charge&, const Charge&) = default;
};

/// Box (row, col, comp) of a multipartition diagram.
struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;

  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

/// Representative of x in {0, ..., e-1}.
constexpr int mod_e(long long x, int e) noexcept {
  const long long r = x % e;
  return static_cast<int>(r < 0 ? r + e : r);
}

int rank(const Multipartition& lambda) noexcept;

/// b - a + s_c, unreduced.
int shifted_content(const Node& node, std::span<const int> s);
int residue(const Node& node, const Charge& charge);

/// Addable nodes, grouped by component, top row first within a component.
std::vector<Node> addable_nodes(const Multipartition& lambda);
std::vector<Node> removable_nodes(const Multipartition& lambda);

/// lambda ∪ {node}; InputError if node is not addable.
Multipartition add_node(const Multipartition& lambda, const Node& node);
/// lambda \ {node}; InputError if node is not removable.
Multipartition remove_node(const Multipartition& lambda, const Node& node);

/// Partwise sum, shorter partitions padded with zero parts.
Partition partition_sum(const Partition& mu, const Partition& nu);
/// Componentwise sum. InputError on level mismatch.
Multipartition multipartition_sum(const Multipartition& mu, const Multipartition& nu);

}  // namespace uglov
