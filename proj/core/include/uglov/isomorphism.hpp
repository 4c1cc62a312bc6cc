#pragma once

// Crystal isomorphisms χ_{e,s,s'}: Φ_{s,e}(n) -> Φ_{s',e}(n) between charges
// of one affine orbit. χ is characterised by g_{s',e}(χ(λ)) = g_{s,e}(λ);
// chi_generic computes it that way, the other entry points use the τ and σ_i
// fast paths, which never look at e.

#include <span>
#include <vector>

#include "uglov/affine.hpp"
#include "uglov/types.hpp"

namespace uglov {

/// Rebuilds the g-sequence of λ under the target charge. Throws
/// NotUglovError, and OrbitMismatch when the charges are not in one orbit.
Multipartition chi_generic(const Multipartition& lambda, std::span<const int> s, std::span<const int> target, int e);

/// Target charge τ.s = (s_2, ..., s_l, s_1 + e): (λ^2, ..., λ^l, λ^1).
Multipartition chi_tau(const Multipartition& lambda);
/// Target charge τ^{-1}.s = (s_l - e, s_1, ..., s_{l-1}): (λ^l, λ^1, ..., λ^{l-1}).
Multipartition chi_tau_inverse(const Multipartition& lambda);

/// β(λ^c_a) = λ^c_a - a + s_c for a = 1..count.
std::vector<int> beta_numbers(const Partition& p, int charge, int count);

struct SigmaTransfer {
  Multipartition result;
  /// Rows picked by the transfer: rows of λ^i while scanning λ^{i+1}
  /// bottom-up when s_i > s_{i+1}, rows of λ^{i+1} top-down when s_i < s_{i+1}.
  std::vector<int> selections;
};

/// Target charge σ_i.s (slots i and i+1 swapped), 1 <= i < l. Throws
/// NotUglovError when the β-number transfer has no admissible choice.
SigmaTransfer chi_sigma_traced(const Multipartition& lambda, std::span<const int> s, int i);
Multipartition chi_sigma(const Multipartition& lambda, std::span<const int> s, int i);

/// Target charge σ.s, through a word in τ^{±1} and the σ_i.
Multipartition chi(const Multipartition& lambda, std::span<const int> s, const AffineElement& sigma, int e);

/// Some σ with σ.s = target; OrbitMismatch when none exists.
AffineElement orbit_witness(std::span<const int> s, std::span<const int> target, int e);

}  // namespace uglov
