#pragma once

// Extended affine symmetric group P_l ⋊ S_l acting on Z^l.
//
// An element is stored in normal form σ0·y: a permutation σ0 of {1..l}
// (1-based images) and a translation vector y. It acts on a charge by first
// adding e·y and then moving entry j to slot σ0(j):
//
//     (σ0·y).s = σ0.(s + e·y),   (σ0.t)_k = t_{σ0^{-1}(k)}.
//
// With this convention the generator σ_c swaps slots c and c+1, y_i adds e
// to slot i, and τ = y_l σ_{l-1}···σ_1 sends s to (s_2, ..., s_l, s_1 + e).

#include <span>
#include <vector>

#include "uglov/types.hpp"

namespace uglov {

class AffineElement {
 public:
  AffineElement() = default;
  /// Throws InputError unless perm is a permutation of 1..l and
  /// shift has length l.
  AffineElement(std::vector<int> perm, std::vector<int> shift);

  static AffineElement identity(int level);
  /// σ_i, 1 <= i < l.
  static AffineElement transposition(int i, int level);
  /// y_i^times.
  static AffineElement translation(int i, int level, int times = 1);
  static AffineElement tau(int level);
  static AffineElement permutation(std::vector<int> images);

  int level() const noexcept { return static_cast<int>(perm_.size()); }
  std::span<const int> perm() const noexcept { return perm_; }
  std::span<const int> shift() const noexcept { return shift_; }
  /// σ0(j), 1-based.
  int image(int j) const { return perm_.at(static_cast<std::size_t>(j - 1)); }
  bool is_identity() const noexcept;
  bool is_permutation() const noexcept;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> shift_;
};

std::vector<int> act_on_charge(const AffineElement& sigma, std::span<const int> s, int e);

/// The product a·b; it acts as b first, then a.
AffineElement compose(const AffineElement& a, const AffineElement& b);
AffineElement inverse(const AffineElement& a);

/// 0 <= s_1 <= ... <= s_l < e.
bool in_fundamental_domain(std::span<const int> s, int e);

struct DomainReduction {
  std::vector<int> reduced;  // in 𝒜_{e,l}
  AffineElement witness;     // witness.reduced == original charge
};

/// Entries reduced mod e and stably sorted: the fundamental-domain
/// representative of the orbit of s.
DomainReduction reduce_to_fundamental(std::span<const int> s, int e);

/// Charges already in 𝒜_{e,l} come back unchanged with the identity;
/// anything else goes through reduce_to_fundamental.
DomainReduction reduce_to_domain(std::span<const int> s, int e);

/// σ0.λ = (λ^{σ0^{-1}(1)}, ..., λ^{σ0^{-1}(l)}).
Multipartition permute_components(std::span<const int> perm, const Multipartition& lambda);

}  // namespace uglov
