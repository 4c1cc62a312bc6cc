#include "uglov/types.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "uglov/error.hpp"

namespace uglov {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InputError("negative part " + std::to_string(parts_[i]));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InputError("parts must be weakly decreasing (part " + std::to_string(i + 1) + ")");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::row(int n) {
  if (n < 0) throw InputError("negative size");
  return n == 0 ? Partition{} : Partition(std::vector<int>{n});
}

Partition Partition::column(int n) {
  if (n < 0) throw InputError("negative size");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::rank() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InputError("a multipartition needs at least one component");
}

Multipartition::Multipartition(std::initializer_list<Partition> components)
    : Multipartition(std::vector<Partition>(components)) {}

Multipartition Multipartition::empty(int level) {
  if (level < 1) throw InputError("level must be positive");
  return Multipartition(std::vector<Partition>(static_cast<std::size_t>(level)));
}

Multipartition Multipartition::single(int level, int comp, Partition p) {
  if (comp < 1 || comp > level) throw InputError("component index out of range");
  std::vector<Partition> comps(static_cast<std::size_t>(level));
  comps[static_cast<std::size_t>(comp - 1)] = std::move(p);
  return Multipartition(std::move(comps));
}

int Multipartition::rank() const noexcept {
  int n = 0;
  for (const auto& p : components_) n += p.rank();
  return n;
}

bool Multipartition::is_empty() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Partition& p) { return p.empty(); });
}

const Partition& Multipartition::component(int c) const {
  if (c < 1 || c > level()) throw InputError("component index out of range");
  return components_[static_cast<std::size_t>(c - 1)];
}

Charge::Charge(std::vector<int> s_, int e_) : s(std::move(s_)), e(e_) {
  if (e < 2) throw InputError("e must be at least 2");
  if (s.empty()) throw InputError("charge must have at least one entry");
}

int rank(const Multipartition& lambda) noexcept { return lambda.rank(); }

int shifted_content(const Node& node, std::span<const int> s) {
  if (node.comp < 1 || static_cast<std::size_t>(node.comp) > s.size())
    throw InputError("node component outside the charge");
  return node.col - node.row + s[static_cast<std::size_t>(node.comp - 1)];
}

int residue(const Node& node, const Charge& charge) {
  return mod_e(shifted_content(node, charge.s), charge.e);
}

std::vector<Node> addable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int c = 1; c <= lambda.level(); ++c) {
    const auto& p = lambda.component(c);
    for (int a = 1; a <= p.length() + 1; ++a) {
      if (a == 1 || p.part(a - 1) > p.part(a)) out.push_back({a, p.part(a) + 1, c});
    }
  }
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int c = 1; c <= lambda.level(); ++c) {
    const auto& p = lambda.component(c);
    for (int a = 1; a <= p.length(); ++a) {
      if (p.part(a) > p.part(a + 1)) out.push_back({a, p.part(a), c});
    }
  }
  return out;
}

namespace {

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

Multipartition replace_component(const Multipartition& lambda, int c, Partition p) {
  std::vector<Partition> comps(lambda.components().begin(), lambda.components().end());
  comps[static_cast<std::size_t>(c - 1)] = std::move(p);
  return Multipartition(std::move(comps));
}

}  // namespace

Multipartition add_node(const Multipartition& lambda, const Node& node) {
  if (node.comp < 1 || node.comp > lambda.level()) throw InputError("node component out of range");
  const auto& p = lambda.component(node.comp);
  const int a = node.row;
  if (a < 1 || node.col != p.part(a) + 1 || (a > 1 && p.part(a - 1) <= p.part(a)))
    throw InputError("node is not addable");
  auto parts = parts_of(p);
  if (a > p.length())
    parts.push_back(1);
  else
    ++parts[static_cast<std::size_t>(a - 1)];
  return replace_component(lambda, node.comp, Partition(std::move(parts)));
}

Multipartition remove_node(const Multipartition& lambda, const Node& node) {
  if (node.comp < 1 || node.comp > lambda.level()) throw InputError("node component out of range");
  const auto& p = lambda.component(node.comp);
  const int a = node.row;
  if (a < 1 || a > p.length() || node.col != p.part(a) || p.part(a + 1) >= p.part(a))
    throw InputError("node is not removable");
  auto parts = parts_of(p);
  --parts[static_cast<std::size_t>(a - 1)];
  return replace_component(lambda, node.comp, Partition(std::move(parts)));
}

Partition partition_sum(const Partition& mu, const Partition& nu) {
  const int len = std::max(mu.length(), nu.length());
  std::vector<int> parts(static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i) parts[static_cast<std::size_t>(i - 1)] = mu.part(i) + nu.part(i);
  return Partition(std::move(parts));
}

Multipartition multipartition_sum(const Multipartition& mu, const Multipartition& nu) {
  if (mu.level() != nu.level()) throw InputError("multipartition levels differ");
  std::vector<Partition> comps;
  comps.reserve(static_cast<std::size_t>(mu.level()));
  for (int c = 1; c <= mu.level(); ++c) comps.push_back(partition_sum(mu.component(c), nu.component(c)));
  return Multipartition(std::move(comps));
}

}  // namespace uglov
