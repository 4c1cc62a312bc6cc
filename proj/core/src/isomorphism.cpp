#include "uglov/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "uglov/crystal.hpp"
#include "uglov/error.hpp"

namespace uglov {

namespace {

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

std::vector<int> padded(const Partition& p, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int a = 1; a <= count; ++a) out[idx(a)] = p.part(a);
  return out;
}

std::vector<int> sorted_residues(std::span<const int> s, int e) {
  std::vector<int> r;
  r.reserve(s.size());
  for (int v : s) r.push_back(mod_e(v, e));
  std::sort(r.begin(), r.end());
  return r;
}

Partition checked_partition(std::vector<int> parts) {
  try {
    return Partition(std::move(parts));
  } catch (const InputError&) {
    throw NotUglovError("beta-number transfer produced no partition; input is not in the Uglov set");
  }
}

Multipartition with_pair(const Multipartition& lambda, int i, Partition left, Partition right) {
  std::vector<Partition> comps(lambda.components().begin(), lambda.components().end());
  comps[idx(i)] = std::move(left);
  comps[idx(i + 1)] = std::move(right);
  return Multipartition(std::move(comps));
}

// s_i > s_{i+1}. Each part of λ^{i+1}, bottom-up, claims the smallest
// β-number of λ^i that is at least its own and sits above the previous claim.
// The claimed β-numbers form the new slot i (charge s_{i+1}); λ^i with the
// claimed rows replaced by the claimants' β-numbers is the new slot i+1.
SigmaTransfer transfer_down(const Multipartition& lambda, std::span<const int> s, int i) {
  const auto& upper = lambda.component(i);
  const auto& lower = lambda.component(i + 1);
  const int si = s[idx(i)];
  const int sj = s[idx(i + 1)];
  const int gap = si - sj;
  const int r = std::max(lower.length() + gap, upper.length());
  const int m = r - gap;

  const auto bx = beta_numbers(upper, si, r);
  const auto by = beta_numbers(lower, sj, m);
  const auto x = padded(upper, r);
  const auto y = padded(lower, m);

  std::vector<int> claimed(static_cast<std::size_t>(m));
  std::vector<int> rest = x;
  SigmaTransfer out;
  int bound = r;  // candidates are rows 1..bound
  for (int k = m; k >= 1; --k) {
    const int target = by[idx(k)];
    // bx is strictly decreasing, so the admissible rows form a prefix.
    int a = std::min(bound, static_cast<int>(std::partition_point(bx.begin(), bx.end(),
                                                                   [&](int b) { return b >= target; }) -
                                             bx.begin()));
    if (a < 1)
      throw NotUglovError("no beta-number of component " + std::to_string(i) + " covers row " +
                          std::to_string(k) + " of component " + std::to_string(i + 1));
    claimed[idx(k)] = y[idx(k)] + bx[idx(a)] - target;
    rest[idx(a)] = x[idx(a)] - bx[idx(a)] + target;
    out.selections.push_back(a);
    bound = a - 1;
  }
  out.result = with_pair(lambda, i, checked_partition(std::move(claimed)), checked_partition(std::move(rest)));
  return out;
}

// s_i < s_{i+1}: undoes transfer_down. Slot i holds the claimed β-numbers
// (charge s_i); each, top-down, returns to the first row of slot i+1 below the
// previous one whose β-number does not exceed it.
SigmaTransfer transfer_up(const Multipartition& lambda, std::span<const int> s, int i) {
  const auto& claimed_part = lambda.component(i);
  const auto& merged_part = lambda.component(i + 1);
  const int si = s[idx(i)];
  const int sj = s[idx(i + 1)];
  const int gap = sj - si;
  const int r = std::max(merged_part.length(), claimed_part.length() + gap);
  const int m = r - gap;

  const auto b_claimed = beta_numbers(claimed_part, si, m);
  const auto b_merged = beta_numbers(merged_part, sj, r);
  const auto a_parts = padded(claimed_part, m);
  const auto b_parts = padded(merged_part, r);

  std::vector<int> restored = b_parts;
  std::vector<int> returned = a_parts;
  SigmaTransfer out;
  int floor = 1;  // candidates are rows floor..r
  for (int k = 1; k <= m; ++k) {
    const int value = b_claimed[idx(k)];
    const int first = static_cast<int>(std::partition_point(b_merged.begin(), b_merged.end(),
                                                            [&](int b) { return b > value; }) -
                                       b_merged.begin()) +
                      1;
    const int a = std::max(first, floor);
    if (a > r)
      throw NotUglovError("no beta-number of component " + std::to_string(i + 1) + " fits under row " +
                          std::to_string(k) + " of component " + std::to_string(i));
    returned[idx(k)] = a_parts[idx(k)] + b_merged[idx(a)] - value;
    restored[idx(a)] = b_parts[idx(a)] - b_merged[idx(a)] + value;
    out.selections.push_back(a);
    floor = a + 1;
  }
  out.result = with_pair(lambda, i, checked_partition(std::move(restored)), checked_partition(std::move(returned)));
  return out;
}

// (λ, s) walked through generator steps.
struct Walk {
  Multipartition lambda;
  std::vector<int> s;
  int e;

  void swap(int i) {
    lambda = chi_sigma(lambda, s, i);
    std::swap(s[idx(i)], s[idx(i + 1)]);
  }
  void tau() {
    lambda = chi_tau(lambda);
    std::rotate(s.begin(), s.begin() + 1, s.end());
    s.back() += e;
  }
  void tau_inverse() {
    lambda = chi_tau_inverse(lambda);
    std::rotate(s.rbegin(), s.rbegin() + 1, s.rend());
    s.front() -= e;
  }
  int level() const { return static_cast<int>(s.size()); }

  // y_i^{±1}: bring slot i to the end that τ^{±1} moves, step over, bring it back.
  void translate(int i, int times) {
    const int l = level();
    for (; times > 0; --times) {
      for (int c = i - 1; c >= 1; --c) swap(c);
      tau();
      for (int c = l - 1; c >= i; --c) swap(c);
    }
    for (; times < 0; ++times) {
      for (int c = i; c <= l - 1; ++c) swap(c);
      tau_inverse();
      for (int c = 1; c <= i - 1; ++c) swap(c);
    }
  }
};

}  // namespace

std::vector<int> beta_numbers(const Partition& p, int charge, int count) {
  std::vector<int> out(static_cast<std::size_t>(std::max(count, 0)));
  for (int a = 1; a <= count; ++a) out[idx(a)] = p.part(a) - a + charge;
  return out;
}

Multipartition chi_generic(const Multipartition& lambda, std::span<const int> s, std::span<const int> target, int e) {
  if (s.size() != target.size()) throw InputError("charges of different levels");
  if (sorted_residues(s, e) != sorted_residues(target, e))
    throw OrbitMismatch("charges are not in one orbit of the affine symmetric group");
  const Charge from({s.begin(), s.end()}, e);
  const Charge to({target.begin(), target.end()}, e);
  return build_from_sequence(g_sequence(lambda, from), to);
}

Multipartition chi_tau(const Multipartition& lambda) {
  std::vector<Partition> comps(lambda.components().begin(), lambda.components().end());
  std::rotate(comps.begin(), comps.begin() + 1, comps.end());
  return Multipartition(std::move(comps));
}

Multipartition chi_tau_inverse(const Multipartition& lambda) {
  std::vector<Partition> comps(lambda.components().begin(), lambda.components().end());
  std::rotate(comps.rbegin(), comps.rbegin() + 1, comps.rend());
  return Multipartition(std::move(comps));
}

SigmaTransfer chi_sigma_traced(const Multipartition& lambda, std::span<const int> s, int i) {
  if (static_cast<int>(s.size()) != lambda.level()) throw InputError("multipartition level differs from charge level");
  if (i < 1 || i >= lambda.level()) throw InputError("sigma index out of range");
  const int si = s[idx(i)];
  const int sj = s[idx(i + 1)];
  if (si == sj) return {lambda, {}};
  return si > sj ? transfer_down(lambda, s, i) : transfer_up(lambda, s, i);
}

Multipartition chi_sigma(const Multipartition& lambda, std::span<const int> s, int i) {
  return chi_sigma_traced(lambda, s, i).result;
}

Multipartition chi(const Multipartition& lambda, std::span<const int> s, const AffineElement& sigma, int e) {
  if (sigma.level() != lambda.level() || static_cast<int>(s.size()) != lambda.level())
    throw InputError("levels of multipartition, charge and group element differ");
  Walk walk{lambda, {s.begin(), s.end()}, e};
  const int l = walk.level();

  for (int i = 1; i <= l; ++i) walk.translate(i, sigma.shift()[idx(i)]);

  // Slot k must end up holding original entry σ0^{-1}(k); translations kept
  // every entry in place, so track positions and bubble.
  std::vector<int> at(static_cast<std::size_t>(l));
  std::iota(at.begin(), at.end(), 1);
  for (int k = 1; k <= l; ++k) {
    int wanted = 0;
    for (int j = 1; j <= l; ++j)
      if (sigma.image(j) == k) wanted = j;
    int p = static_cast<int>(std::find(at.begin(), at.end(), wanted) - at.begin()) + 1;
    for (; p > k; --p) {
      walk.swap(p - 1);
      std::swap(at[idx(p - 1)], at[idx(p)]);
    }
  }

  if (walk.s != act_on_charge(sigma, s, e)) throw Error("generator walk did not reach the target charge");
  return std::move(walk.lambda);
}

AffineElement orbit_witness(std::span<const int> s, std::span<const int> target, int e) {
  if (s.size() != target.size()) throw InputError("charges of different levels");
  const auto from = reduce_to_fundamental(s, e);
  const auto to = reduce_to_fundamental(target, e);
  if (from.reduced != to.reduced) throw OrbitMismatch("charges are not in one orbit of the affine symmetric group");
  return compose(to.witness, inverse(from.witness));
}

}  // namespace uglov
