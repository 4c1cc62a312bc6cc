#pragma once

// Generalised Mullineux map m_{s,e}: Φ_{s,e}(n) -> Φ_{-s,e}(n), obtained by
// negating the residues of the g-sequence.

#include "uglov/types.hpp"

namespace uglov {

/// -s = (-s_l, ..., -s_1), same e.
Charge negated_charge(const Charge& charge);

/// Rebuilds (-k_1, ..., -k_n) mod e under -s, where (k_1, ..., k_n) is the
/// g-sequence of λ under s. Throws NotUglovError.
Multipartition mullineux(const Multipartition& lambda, const Charge& charge);

/// Image of the one-row partition (n) at level one:
/// ((q+1)^r q^{e-1-r}) with n = q(e-1) + r, 0 <= r <= e-2.
Partition mullineux_typeA_row(int n, int e);

}  // namespace uglov
