#include "uglov/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "uglov/affine.hpp"
#include "uglov/error.hpp"
#include "uglov/isomorphism.hpp"
#include "uglov/mullineux.hpp"

namespace uglov {

namespace {

using Kind = OneDimRep::Kind;

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

void check_rep(const OneDimRep& rep, int level) {
  if (rep.comp < 1 || rep.comp > level) throw InputError("component index out of range");
  if (rep.size < 0) throw InputError("n must be non-negative");
}

Partition column(int n) { return Partition::column(n); }
Partition row(int n) { return Partition::row(n); }

// Blocks (value, count); non-positive counts and zero values vanish.
Partition blocks(std::initializer_list<std::pair<int, int>> spec) {
  std::vector<int> parts;
  for (auto [value, count] : spec)
    if (value > 0)
      for (int c = 0; c < count; ++c) parts.push_back(value);
  return Partition(std::move(parts));
}

Multipartition pair(Partition first, Partition second) { return Multipartition({std::move(first), std::move(second)}); }

Multipartition trivial_recursion(int comp, int n, const Charge& charge, const ResidueClassMap& classes) {
  const int l = charge.level();
  const int e = charge.e;
  const int k = mod_e(charge.at(comp), e);
  const int home = classes.alpha_of(k);
  const int top = charge.at(home);

  // The class k1 with the smallest positive gap k1 - k among those not
  // dominated by k.
  int best_gap = 0;
  int best_home = 0;
  for (int k1 : classes.residues) {
    if (k1 == k) continue;
    const int other = classes.alpha_of(k1);
    const int v = charge.at(other);
    const bool dominated = top > v || (v > top && top > v - e && home < other);
    if (dominated) continue;
    const int gap = mod_e(k1 - k, e);
    if (best_home == 0 || gap < best_gap) {
      best_gap = gap;
      best_home = other;
    }
  }
  if (best_home == 0 || n <= best_gap) return Multipartition::single(l, home, row(n));
  return multipartition_sum(Multipartition::single(l, home, row(best_gap)),
                            trivial_recursion(best_home, n - best_gap, charge, classes));
}

// α-representatives in increasing index order.
std::vector<int> representatives(const ResidueClassMap& classes) {
  std::vector<int> reps;
  for (int k : classes.residues) reps.push_back(classes.alpha_of(k));
  std::sort(reps.begin(), reps.end());
  return reps;
}

bool decreasing_along_reps(const Charge& charge, const std::vector<int>& reps) {
  for (std::size_t t = 0; t + 1 < reps.size(); ++t)
    if (charge.at(reps[t]) <= charge.at(reps[t + 1])) return false;
  return true;
}

Multipartition sign_recursion(int comp, int n, const Charge& charge, const std::vector<int>& reps) {
  const int l = charge.level();
  const int e = charge.e;
  const int k = mod_e(charge.at(comp), e);
  std::size_t i = 0;
  while (mod_e(charge.at(reps[i]), e) != k) ++i;
  if (i == 0) return Multipartition::single(l, reps[0], mullineux_typeA_row(n, e));

  int best_gap = e;
  std::size_t best = 0;
  for (std::size_t j = 0; j < i; ++j) {
    const int gap = mod_e(k - charge.at(reps[j]), e);
    if (gap < best_gap) {
      best_gap = gap;
      best = j;
    }
  }
  if (n <= best_gap) return Multipartition::single(l, reps[i], column(n));
  return multipartition_sum(Multipartition::single(l, reps[i], column(best_gap)),
                            sign_recursion(reps[best], n - best_gap, charge, reps));
}

constexpr TypeBBranchInfo kBranches[] = {
    {TypeBBranch::EqualTrivial, "equal/row", "s1 = s2: ((n),∅) and (∅,(n)) give ((n),∅)", "s1 = s2: ((n),∅)", false},
    {TypeBBranch::EqualSign, "equal/column", "s1 = s2: ((1^n),∅) and (∅,(1^n)) give (m_e(1^n),∅)",
     "s1 = s2: (m_e(1^n),∅)", false},
    {TypeBBranch::FirstAboveRowFirst, "s1>s2/row 1", "((n),∅) gives ((n),∅)", "s1 > s2: ((n),∅)", false},
    {TypeBBranch::FirstAboveRowSecondWhole, "s1>s2/row 2/whole", "(∅,(n)) if j <= n, j = s1-s2 mod e",
     "(∅,(n)) if n <= j", true},
    {TypeBBranch::FirstAboveRowSecondSplit, "s1>s2/row 2/split", "((n-j),(j)) otherwise", "((n-j),(j)) if n > j",
     true},
    {TypeBBranch::FirstAboveColumnFirst, "s1>s2/column 1", "((1^n),∅) gives (m_e(1^n),∅)", "s1 > s2: (m_e(1^n),∅)",
     false},
    {TypeBBranch::FirstAboveColumnSecondWhole, "s1>s2/column 2/whole", "(∅,(1^n)) if j <= n, j = s2-s1 mod e",
     "(∅,(1^n)) if n <= j", true},
    {TypeBBranch::FirstAboveColumnSecondSplit, "s1>s2/column 2/split", "(m_e(1^{n-j}),(1^j)) otherwise",
     "(m_e(1^{n-j}),(1^j)) if n > j", true},
    {TypeBBranch::SecondAboveRowSecond, "s2>s1/row 2", "(∅,(n)) gives (∅,(n))", "s2 > s1: (∅,(n))", false},
    {TypeBBranch::SecondNearRowFirst, "s1<s2<s1+e/row 1", "((n),∅) if j <= n, ((j),(n-j)) otherwise, j = s2-s1 mod e",
     "((n),∅) for every n", true},
    {TypeBBranch::SecondFarRowFirstWhole, "s2>=s1+e/row 1/whole", "((n),∅) if j <= n, j = s2-s1 mod e",
     "((n),∅) if n <= j", true},
    {TypeBBranch::SecondFarRowFirstSplit, "s2>=s1+e/row 1/split", "((j),(n-j)) otherwise", "((j),(n-j)) if n > j",
     true},
    {TypeBBranch::SecondFarColumnSecond, "s2>=s1+e/column 2", "(∅,(1^n)) gives (∅,m_e(1^n))", "(∅,m_e(1^n))", false},
    {TypeBBranch::SecondFarColumnFirstWhole, "s2>=s1+e/column 1/whole", "((1^n),∅) if j <= n, j = s1+e-s2 mod e",
     "((1^n),∅) if n <= j", true},
    {TypeBBranch::SecondFarColumnFirstSplit, "s2>=s1+e/column 1/split", "((1^j),m_e(1^{n-j})) otherwise",
     "((1^j),m_e(1^{n-j})) if n > j", true},
    {TypeBBranch::SecondNearColumnSecondLow, "s1<s2<s1+e/column 2/d<=r",
     "((q+1)^{r-d} q^{e-1-r}, (q+1)^d) if d <= r; d = s2-s1, n = q(e-1)+r, q > 0, 0 <= r <= e-1",
     "same shape; q >= 0, 0 <= r <= e-2", true},
    {TypeBBranch::SecondNearColumnSecondHigh, "s1<s2<s1+e/column 2/d>r", "(q^{e-1-d}, (q+1)^r q^{d-r}) otherwise",
     "same shape; q >= 0, 0 <= r <= e-2", true},
    {TypeBBranch::SecondNearColumnFirstLow, "s1<s2<s1+e/column 1/d'<=r",
     "((q+1)^{d'}, (q+1)^{r-d'} q^{e-1-r}) if d' <= r; d' = s1+e-s2", "same shape; q >= 0, 0 <= r <= e-2", true},
    {TypeBBranch::SecondNearColumnFirstHigh, "s1<s2<s1+e/column 1/d'>r",
     "((q+1)^r q^{d'-r}, q^{s2-1-s1}) otherwise", "same shape; q >= 0, 0 <= r <= e-2", true},
};

}  // namespace

Multipartition OneDimRep::to_multipartition(int level) const {
  check_rep(*this, level);
  return Multipartition::single(level, comp, kind == Kind::Trivial ? row(size) : column(size));
}

ResidueClassMap residue_class_map(const Charge& charge) {
  ResidueClassMap out;
  out.alpha.assign(static_cast<std::size_t>(charge.e), 0);
  for (int j = 1; j <= charge.level(); ++j) {
    const int k = mod_e(charge.at(j), charge.e);
    int& a = out.alpha[static_cast<std::size_t>(k)];
    if (a == 0 || charge.at(j) > charge.at(a)) a = j;
  }
  for (int k = 0; k < charge.e; ++k)
    if (out.alpha_of(k) != 0) out.residues.push_back(k);
  return out;
}

ResidueSequence label_sequence(const OneDimRep& rep, const Charge& charge) {
  check_rep(rep, charge.level());
  const int k = charge.at(rep.comp);
  const int step = rep.kind == Kind::Trivial ? 1 : -1;
  ResidueSequence g(static_cast<std::size_t>(rep.size));
  for (int t = 0; t < rep.size; ++t) g[static_cast<std::size_t>(t)] = mod_e(static_cast<long long>(k) + step * t, charge.e);
  return g;
}

Multipartition label_general(const OneDimRep& rep, const Charge& charge) {
  return build_from_sequence(label_sequence(rep, charge), charge);
}

Multipartition label_trivial_closed(const OneDimRep& rep, const Charge& charge) {
  check_rep(rep, charge.level());
  if (rep.kind != Kind::Trivial) throw InputError("label_trivial_closed expects a row representation");
  return trivial_recursion(rep.comp, rep.size, charge, residue_class_map(charge));
}

Multipartition label_sign_closed(const OneDimRep& rep, const Charge& charge) {
  check_rep(rep, charge.level());
  if (rep.kind != Kind::Sign) throw InputError("label_sign_closed expects a column representation");
  const auto reps = representatives(residue_class_map(charge));
  if (decreasing_along_reps(charge, reps)) return sign_recursion(rep.comp, rep.size, charge, reps);

  const int l = charge.level();
  std::vector<int> order(static_cast<std::size_t>(l));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return charge.at(x) > charge.at(y); });
  std::vector<int> images(static_cast<std::size_t>(l));
  for (int k = 1; k <= l; ++k) images[idx(order[idx(k)])] = k;
  const auto sort = AffineElement::permutation(images);
  const Charge sorted(act_on_charge(sort, charge.s, charge.e), charge.e);

  const auto sorted_reps = representatives(residue_class_map(sorted));
  const auto there = sign_recursion(sort.image(rep.comp), rep.size, sorted, sorted_reps);
  return chi(there, sorted.s, inverse(sort), charge.e);
}

std::span<const TypeBBranchInfo> typeB_branches() { return kBranches; }

const TypeBBranchInfo& branch_info(TypeBBranch branch) { return kBranches[static_cast<std::size_t>(branch)]; }

TypeBLabel label_typeB_traced(const OneDimRep& rep, int s1, int s2, int e) {
  check_rep(rep, 2);
  if (e < 2) throw InputError("e must be at least 2");
  using B = TypeBBranch;
  const int n = rep.size;
  const bool first = rep.comp == 1;
  const auto mrow = [e](int m) { return mullineux_typeA_row(m, e); };

  if (s1 == s2) {
    if (rep.kind == Kind::Trivial) return {pair(row(n), {}), B::EqualTrivial};
    return {pair(mrow(n), {}), B::EqualSign};
  }

  if (s1 > s2) {
    if (rep.kind == Kind::Trivial) {
      if (first) return {pair(row(n), {}), B::FirstAboveRowFirst};
      const int j = mod_e(s1 - s2, e);
      if (n <= j) return {pair({}, row(n)), B::FirstAboveRowSecondWhole};
      return {pair(row(n - j), row(j)), B::FirstAboveRowSecondSplit};
    }
    if (first) return {pair(mrow(n), {}), B::FirstAboveColumnFirst};
    const int j = mod_e(s2 - s1, e);
    if (n <= j) return {pair({}, column(n)), B::FirstAboveColumnSecondWhole};
    return {pair(mrow(n - j), column(j)), B::FirstAboveColumnSecondSplit};
  }

  if (rep.kind == Kind::Trivial) {
    if (!first) return {pair({}, row(n)), B::SecondAboveRowSecond};
    if (s2 - s1 < e) return {pair(row(n), {}), B::SecondNearRowFirst};
    const int j = mod_e(s2 - s1, e);
    if (n <= j) return {pair(row(n), {}), B::SecondFarRowFirstWhole};
    return {pair(row(j), row(n - j)), B::SecondFarRowFirstSplit};
  }

  if (s2 >= s1 + e) {
    if (!first) return {pair({}, mrow(n)), B::SecondFarColumnSecond};
    const int j = mod_e(s1 - s2, e);
    if (n <= j) return {pair(column(n), {}), B::SecondFarColumnFirstWhole};
    return {pair(column(j), mrow(n - j)), B::SecondFarColumnFirstSplit};
  }

  const int q = n / (e - 1);
  const int r = n % (e - 1);
  if (!first) {
    const int d = s2 - s1;
    if (d <= r) return {pair(blocks({{q + 1, r - d}, {q, e - 1 - r}}), blocks({{q + 1, d}})), B::SecondNearColumnSecondLow};
    return {pair(blocks({{q, e - 1 - d}}), blocks({{q + 1, r}, {q, d - r}})), B::SecondNearColumnSecondHigh};
  }
  const int d = s1 + e - s2;
  if (d <= r) return {pair(blocks({{q + 1, d}}), blocks({{q + 1, r - d}, {q, e - 1 - r}})), B::SecondNearColumnFirstLow};
  return {pair(blocks({{q + 1, r}, {q, d - r}}), blocks({{q, s2 - 1 - s1}})), B::SecondNearColumnFirstHigh};
}

Multipartition label_typeB(const OneDimRep& rep, int s1, int s2, int e) {
  return label_typeB_traced(rep, s1, s2, e).label;
}

LabelSet one_dim_label_set(const Charge& charge, int n) {
  if (n < 0) throw InputError("n must be non-negative");
  LabelSet out;
  std::set<Multipartition> distinct;
  for (auto kind : {Kind::Trivial, Kind::Sign})
    for (int j = 1; j <= charge.level(); ++j) {
      const OneDimRep rep{kind, j, n};
      auto label = label_general(rep, charge);
      distinct.insert(label);
      out.entries.push_back({rep, std::move(label)});
    }
  out.distinct.assign(distinct.begin(), distinct.end());
  return out;
}

}  // namespace uglov
