#pragma once

// Good-node calculus on multipartitions: the order ≺_{s,e} on i-nodes,
// i-words and their RA-reduction, good addable/removable nodes, the crystal
// operators and the Uglov sets Φ_{s,e}(n) they generate.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uglov/types.hpp"

namespace uglov {

/// A word in Z/eZ; each entry lies in [0, e).
using ResidueSequence = std::vector<int>;

/// γ ≺ γ' iff content(γ) < content(γ'), or contents tie and comp(γ) > comp(γ').
/// Contents are raw integers b - a + s_c, never residues.
bool node_precedes(const Node& a, const Node& b, std::span<const int> s);

enum class Letter : char { Addable = 'A', Removable = 'R' };

struct WordEntry {
  Node node;
  Letter letter;

  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

/// Addable and removable i-nodes in strictly increasing ≺ order.
struct BoundaryWord {
  std::vector<WordEntry> entries;

  std::string letters() const;
};

struct ReducedCounts {
  int addable = 0;    // p in A^p R^q
  int removable = 0;  // q in A^p R^q

  friend bool operator==(const ReducedCounts&, const ReducedCounts&) = default;
};

BoundaryWord i_word(const Multipartition& lambda, const Charge& charge, int i);

/// Deletes RA factors until the word has shape A^p R^q. InputError on
/// letters other than 'A' and 'R'.
ReducedCounts reduce_word(std::string_view word);

/// Rightmost surviving A of the reduced i-word.
std::optional<Node> good_addable_node(const Multipartition& lambda, const Charge& charge, int i);
/// Leftmost surviving R of the reduced i-word.
std::optional<Node> good_removable_node(const Multipartition& lambda, const Charge& charge, int i);

/// Adds the good addable i-node.
std::optional<Multipartition> crystal_lower(const Multipartition& lambda, const Charge& charge, int i);
/// Removes the good removable i-node.
std::optional<Multipartition> crystal_raise(const Multipartition& lambda, const Charge& charge, int i);

/// Applies crystal_lower from the empty multipartition. Throws StepFailure
/// when a residue has no good addable node, InputError on residues outside [0, e).
Multipartition build_from_sequence(std::span<const int> g, const Charge& charge);

/// Picks one residue among those (ascending, non-empty) that admit a good
/// removable node.
using ResidueChoice = std::function<int(std::span<const int> candidates)>;

struct PeelResult {
  Multipartition apex;
  ResidueSequence g;  // in building order: replays lambda from apex
};

/// Removes good nodes until none is left. The default rule takes the
/// smallest admissible residue, which makes g canonical.
PeelResult peel(const Multipartition& lambda, const Charge& charge, const ResidueChoice& choose = {});

bool is_uglov(const Multipartition& lambda, const Charge& charge);

/// Canonical g_{s,e}(λ). Throws NotUglovError.
ResidueSequence g_sequence(const Multipartition& lambda, const Charge& charge);

/// Φ_{s,e}(n), sorted.
std::vector<Multipartition> enumerate_uglov(const Charge& charge, int n);

}  // namespace uglov
