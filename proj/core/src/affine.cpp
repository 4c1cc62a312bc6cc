#include "uglov/affine.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "uglov/error.hpp"
#include "uglov/flotw.hpp"

namespace uglov {

namespace {

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

std::vector<int> inverse_perm(std::span<const int> perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) inv[idx(perm[j])] = static_cast<int>(j + 1);
  return inv;
}

}  // namespace

AffineElement::AffineElement(std::vector<int> perm, std::vector<int> shift)
    : perm_(std::move(perm)), shift_(std::move(shift)) {
  if (perm_.empty()) throw InputError("perm: empty permutation");
  if (shift_.size() != perm_.size()) throw InputError("shift: length differs from perm");
  std::vector<bool> seen(perm_.size(), false);
  for (int v : perm_) {
    if (v < 1 || v > level() || seen[idx(v)]) throw InputError("perm: not a permutation of 1..l");
    seen[idx(v)] = true;
  }
}

AffineElement AffineElement::identity(int level) {
  if (level < 1) throw InputError("level must be positive");
  std::vector<int> perm(static_cast<std::size_t>(level));
  std::iota(perm.begin(), perm.end(), 1);
  return {std::move(perm), std::vector<int>(static_cast<std::size_t>(level), 0)};
}

AffineElement AffineElement::transposition(int i, int level) {
  if (i < 1 || i >= level) throw InputError("transposition index out of range");
  auto id = identity(level);
  std::swap(id.perm_[idx(i)], id.perm_[idx(i + 1)]);
  return id;
}

AffineElement AffineElement::translation(int i, int level, int times) {
  if (i < 1 || i > level) throw InputError("translation index out of range");
  auto id = identity(level);
  id.shift_[idx(i)] = times;
  return id;
}

AffineElement AffineElement::tau(int level) {
  auto t = translation(level, level);
  for (int c = 1; c < level; ++c) t = compose(t, transposition(level - c, level));
  return t;
}

AffineElement AffineElement::permutation(std::vector<int> images) {
  const auto l = images.size();
  return {std::move(images), std::vector<int>(l, 0)};
}

bool AffineElement::is_identity() const noexcept {
  for (std::size_t j = 0; j < perm_.size(); ++j)
    if (perm_[j] != static_cast<int>(j + 1) || shift_[j] != 0) return false;
  return true;
}

bool AffineElement::is_permutation() const noexcept {
  return std::all_of(shift_.begin(), shift_.end(), [](int v) { return v == 0; });
}

std::vector<int> act_on_charge(const AffineElement& sigma, std::span<const int> s, int e) {
  if (static_cast<int>(s.size()) != sigma.level()) throw InputError("charge level differs from group element");
  std::vector<int> out(s.size());
  for (int j = 1; j <= sigma.level(); ++j)
    out[idx(sigma.image(j))] = s[idx(j)] + e * sigma.shift()[idx(j)];
  return out;
}

AffineElement compose(const AffineElement& a, const AffineElement& b) {
  if (a.level() != b.level()) throw InputError("group elements of different levels");
  // σ0 y σ0' y' = σ0σ0' (σ0'^{-1} y σ0') y', and σ0'^{-1} y σ0' translates slot j by y_{σ0'(j)}.
  const int l = a.level();
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::vector<int> shift(static_cast<std::size_t>(l));
  for (int j = 1; j <= l; ++j) {
    perm[idx(j)] = a.image(b.image(j));
    shift[idx(j)] = a.shift()[idx(b.image(j))] + b.shift()[idx(j)];
  }
  return {std::move(perm), std::move(shift)};
}

AffineElement inverse(const AffineElement& a) {
  const auto inv = inverse_perm(a.perm());
  std::vector<int> shift(inv.size());
  for (int j = 1; j <= a.level(); ++j) shift[idx(j)] = -a.shift()[idx(inv[idx(j)])];
  return {inv, std::move(shift)};
}

bool in_fundamental_domain(std::span<const int> s, int e) {
  if (s.empty()) return false;
  if (s.front() < 0 || s.back() >= e) return false;
  return std::is_sorted(s.begin(), s.end());
}

DomainReduction reduce_to_domain(std::span<const int> s, int e) {
  const Charge charge({s.begin(), s.end()}, e);
  if (in_domain(charge)) return {charge.s, AffineElement::identity(charge.level())};
  return reduce_to_fundamental(s, e);
}

DomainReduction reduce_to_fundamental(std::span<const int> s, int e) {
  const Charge charge({s.begin(), s.end()}, e);
  const int l = charge.level();

  std::vector<int> order(static_cast<std::size_t>(l));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return mod_e(s[idx(x)], e) < mod_e(s[idx(y)], e); });

  // Slot k of the reduced charge holds original entry order[k]; the witness
  // moves it back and restores the multiple of e it lost.
  std::vector<int> reduced(static_cast<std::size_t>(l));
  std::vector<int> shift(static_cast<std::size_t>(l));
  for (int k = 1; k <= l; ++k) {
    const int v = s[idx(order[idx(k)])];
    reduced[idx(k)] = mod_e(v, e);
    shift[idx(k)] = (v - reduced[idx(k)]) / e;
  }
  return {std::move(reduced), AffineElement(std::move(order), std::move(shift))};
}

Multipartition permute_components(std::span<const int> perm, const Multipartition& lambda) {
  if (static_cast<int>(perm.size()) != lambda.level()) throw InputError("permutation level differs");
  std::vector<Partition> comps(perm.size());
  for (int j = 1; j <= lambda.level(); ++j) {
    if (perm[idx(j)] < 1 || perm[idx(j)] > lambda.level()) throw InputError("perm: image out of range");
    comps[idx(perm[idx(j)])] = lambda.component(j);
  }
  return Multipartition(std::move(comps));
}

}  // namespace uglov
