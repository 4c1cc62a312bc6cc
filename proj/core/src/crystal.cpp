#include "uglov/crystal.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "uglov/error.hpp"

namespace uglov {

bool node_precedes(const Node& a, const Node& b, std::span<const int> s) {
  const int ca = shifted_content(a, s);
  const int cb = shifted_content(b, s);
  return ca < cb || (ca == cb && a.comp > b.comp);
}

std::string BoundaryWord::letters() const {
  std::string out;
  out.reserve(entries.size());
  for (const auto& entry : entries) out.push_back(static_cast<char>(entry.letter));
  return out;
}

namespace {

void check_residue(int i, const Charge& charge) {
  if (i < 0 || i >= charge.e) throw InputError("residue " + std::to_string(i) + " outside [0, e)");
}

void check_level(const Multipartition& lambda, const Charge& charge) {
  if (lambda.level() != charge.level()) throw InputError("multipartition level differs from charge level");
}

// Positions (into the word) of the surviving A's and R's after RA deletion.
struct Survivors {
  std::vector<std::size_t> addable;
  std::vector<std::size_t> removable;
};

template <typename IsRemovable>
Survivors reduce_positions(std::size_t size, IsRemovable is_removable) {
  Survivors out;
  for (std::size_t k = 0; k < size; ++k) {
    if (is_removable(k)) {
      out.removable.push_back(k);
    } else if (!out.removable.empty()) {
      out.removable.pop_back();  // RA factor
    } else {
      out.addable.push_back(k);
    }
  }
  return out;
}

Survivors reduce(const BoundaryWord& w) {
  return reduce_positions(w.entries.size(),
                          [&](std::size_t k) { return w.entries[k].letter == Letter::Removable; });
}

}  // namespace

BoundaryWord i_word(const Multipartition& lambda, const Charge& charge, int i) {
  check_level(lambda, charge);
  check_residue(i, charge);
  BoundaryWord w;
  for (const auto& n : addable_nodes(lambda))
    if (residue(n, charge) == i) w.entries.push_back({n, Letter::Addable});
  for (const auto& n : removable_nodes(lambda))
    if (residue(n, charge) == i) w.entries.push_back({n, Letter::Removable});
  std::sort(w.entries.begin(), w.entries.end(), [&](const WordEntry& x, const WordEntry& y) {
    return node_precedes(x.node, y.node, charge.s);
  });
  return w;
}

ReducedCounts reduce_word(std::string_view word) {
  for (char ch : word)
    if (ch != 'A' && ch != 'R') throw InputError(std::string("word letter '") + ch + "' is not A or R");
  const auto survivors = reduce_positions(word.size(), [&](std::size_t k) { return word[k] == 'R'; });
  return {static_cast<int>(survivors.addable.size()), static_cast<int>(survivors.removable.size())};
}

std::optional<Node> good_addable_node(const Multipartition& lambda, const Charge& charge, int i) {
  const auto w = i_word(lambda, charge, i);
  const auto survivors = reduce(w);
  if (survivors.addable.empty()) return std::nullopt;
  return w.entries[survivors.addable.back()].node;
}

std::optional<Node> good_removable_node(const Multipartition& lambda, const Charge& charge, int i) {
  const auto w = i_word(lambda, charge, i);
  const auto survivors = reduce(w);
  if (survivors.removable.empty()) return std::nullopt;
  return w.entries[survivors.removable.front()].node;
}

std::optional<Multipartition> crystal_lower(const Multipartition& lambda, const Charge& charge, int i) {
  if (auto node = good_addable_node(lambda, charge, i)) return add_node(lambda, *node);
  return std::nullopt;
}

std::optional<Multipartition> crystal_raise(const Multipartition& lambda, const Charge& charge, int i) {
  if (auto node = good_removable_node(lambda, charge, i)) return remove_node(lambda, *node);
  return std::nullopt;
}

Multipartition build_from_sequence(std::span<const int> g, const Charge& charge) {
  auto lambda = Multipartition::empty(charge.level());
  for (std::size_t k = 0; k < g.size(); ++k) {
    check_residue(g[k], charge);
    auto next = crystal_lower(lambda, charge, g[k]);
    if (!next) throw StepFailure(k, g[k]);
    lambda = std::move(*next);
  }
  return lambda;
}

PeelResult peel(const Multipartition& lambda, const Charge& charge, const ResidueChoice& choose) {
  check_level(lambda, charge);
  PeelResult out{lambda, {}};
  std::vector<int> candidates;
  std::vector<Node> good(static_cast<std::size_t>(charge.e));
  for (;;) {
    candidates.clear();
    for (int i = 0; i < charge.e; ++i) {
      if (auto node = good_removable_node(out.apex, charge, i)) {
        candidates.push_back(i);
        good[static_cast<std::size_t>(i)] = *node;
        if (!choose) break;
      }
    }
    if (candidates.empty()) break;
    const int i = choose ? choose(candidates) : candidates.front();
    if (!std::binary_search(candidates.begin(), candidates.end(), i))
      throw InputError("residue choice rule returned a non-candidate");
    out.apex = remove_node(out.apex, good[static_cast<std::size_t>(i)]);
    out.g.push_back(i);
  }
  std::reverse(out.g.begin(), out.g.end());
  return out;
}

bool is_uglov(const Multipartition& lambda, const Charge& charge) {
  return peel(lambda, charge).apex.is_empty();
}

ResidueSequence g_sequence(const Multipartition& lambda, const Charge& charge) {
  auto result = peel(lambda, charge);
  if (!result.apex.is_empty()) throw NotUglovError("multipartition is not in the Uglov set for this charge");
  return std::move(result.g);
}

std::vector<Multipartition> enumerate_uglov(const Charge& charge, int n) {
  if (n < 0) throw InputError("n must be non-negative");
  std::set<Multipartition> layer{Multipartition::empty(charge.level())};
  for (int step = 0; step < n; ++step) {
    std::set<Multipartition> next;
    for (const auto& lambda : layer)
      for (int i = 0; i < charge.e; ++i)
        if (auto mu = crystal_lower(lambda, charge, i)) next.insert(std::move(*mu));
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

}  // namespace uglov
