#pragma once

// Non-recursive membership test for Φ_{s,e}(n), valid for charges in
//   𝒜_{e,l} = { s : 0 <= s_j - s_i < e for all i < j }.

#include <optional>
#include <utility>

#include "uglov/types.hpp"

namespace uglov {

bool in_domain(const Charge& charge);

/// A charge known to lie in 𝒜_{e,l}.
class DomainCharge {
 public:
  /// Empty when the charge is outside 𝒜_{e,l}.
  static std::optional<DomainCharge> make(Charge charge);
  /// Throws DomainError when the charge is outside 𝒜_{e,l}.
  explicit DomainCharge(Charge charge);

  const Charge& charge() const noexcept { return charge_; }

 private:
  struct Checked {};
  DomainCharge(Charge charge, Checked) : charge_(std::move(charge)) {}
  Charge charge_;
};

/// The three FLOTW conditions:
///  1. λ^j_i >= λ^{j+1}_{i + s_{j+1} - s_j}      (j < l)
///  2. λ^l_i >= λ^1_{i + e + s_1 - s_l}
///  3. for each part value k > 0 the residues {k - i + s_j mod e : λ^j_i = k}
///     form a proper subset of Z/eZ.
bool is_flotw(const Multipartition& lambda, const DomainCharge& charge);
/// Throws DomainError when the charge is outside 𝒜_{e,l}.
bool is_flotw(const Multipartition& lambda, const Charge& charge);

}  // namespace uglov
