#pragma once

// Uglov labels λ_θs of the one-dimensional representations [n,j] (one row in
// component j) and [1^n,j] (one column in component j).
//
// label_general is the definition: build the residue run starting at s_j mod e
// (ascending for rows, descending for columns). The closed routes are checked
// against it by the conformance sweeps.

#include <span>
#include <string_view>
#include <vector>

#include "uglov/crystal.hpp"
#include "uglov/types.hpp"

namespace uglov {

struct OneDimRep {
  enum class Kind { Trivial, Sign };

  Kind kind = Kind::Trivial;
  int comp = 1;  // 1-based
  int size = 0;

  /// (n) or (1^n) in slot comp, ∅ elsewhere.
  Multipartition to_multipartition(int level) const;

  friend bool operator==(const OneDimRep&, const OneDimRep&) = default;
};

/// Residues hit by s, and for each the minimal index attaining the largest
/// charge entry of that residue.
struct ResidueClassMap {
  std::vector<int> residues;  // ascending
  std::vector<int> alpha;     // indexed by residue; 0 where the residue is not hit

  int alpha_of(int k) const { return alpha.at(static_cast<std::size_t>(k)); }
  bool contains(int k) const { return k >= 0 && k < static_cast<int>(alpha.size()) && alpha_of(k) != 0; }
};

ResidueClassMap residue_class_map(const Charge& charge);

ResidueSequence label_sequence(const OneDimRep& rep, const Charge& charge);
Multipartition label_general(const OneDimRep& rep, const Charge& charge);

/// Recursive splitting of [n, α(k)] along the residue classes that outrank it.
Multipartition label_trivial_closed(const OneDimRep& rep, const Charge& charge);

/// Column labels. When the α-representatives, read by index, have strictly
/// decreasing charge, the recursion applies directly; otherwise the charge is
/// sorted into decreasing order, the label computed there and carried back by
/// the crystal isomorphism.
Multipartition label_sign_closed(const OneDimRep& rep, const Charge& charge);

/// Formula branches of the level-two closed forms.
enum class TypeBBranch {
  EqualTrivial,
  EqualSign,
  FirstAboveRowFirst,
  FirstAboveRowSecondWhole,
  FirstAboveRowSecondSplit,
  FirstAboveColumnFirst,
  FirstAboveColumnSecondWhole,
  FirstAboveColumnSecondSplit,
  SecondAboveRowSecond,
  SecondNearRowFirst,
  SecondFarRowFirstWhole,
  SecondFarRowFirstSplit,
  SecondFarColumnSecond,
  SecondFarColumnFirstWhole,
  SecondFarColumnFirstSplit,
  SecondNearColumnSecondLow,
  SecondNearColumnSecondHigh,
  SecondNearColumnFirstLow,
  SecondNearColumnFirstHigh,
};

struct TypeBBranchInfo {
  TypeBBranch branch;
  std::string_view name;
  std::string_view published;
  std::string_view implemented;
  bool deviates;
};

/// One entry per branch, in declaration order.
std::span<const TypeBBranchInfo> typeB_branches();
const TypeBBranchInfo& branch_info(TypeBBranch branch);

struct TypeBLabel {
  Multipartition label;
  TypeBBranch branch;
};

/// Level-two closed formulas; rep.comp must be 1 or 2.
TypeBLabel label_typeB_traced(const OneDimRep& rep, int s1, int s2, int e);
Multipartition label_typeB(const OneDimRep& rep, int s1, int s2, int e);

struct LabeledRep {
  OneDimRep rep;
  Multipartition label;
};

struct LabelSet {
  std::vector<LabeledRep> entries;        // [n,1..l] then [1^n,1..l]
  std::vector<Multipartition> distinct;   // sorted
};

/// Λ_{s,e}(n) through label_general.
LabelSet one_dim_label_set(const Charge& charge, int n);

}  // namespace uglov
