#include "uglov/flotw.hpp"

#include <map>
#include <utility>
#include <vector>

#include "uglov/error.hpp"

namespace uglov {

bool in_domain(const Charge& charge) {
  const auto& s = charge.s;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[j] - s[i] < 0 || s[j] - s[i] >= charge.e) return false;
  return true;
}

std::optional<DomainCharge> DomainCharge::make(Charge charge) {
  if (!in_domain(charge)) return std::nullopt;
  return DomainCharge(std::move(charge), Checked{});
}

DomainCharge::DomainCharge(Charge charge) : charge_(std::move(charge)) {
  if (!in_domain(charge_)) throw DomainError("charge is not in the FLOTW domain");
}

namespace {

// λ^upper_i >= λ^lower_{i + offset} for all i >= 1. Past the last row of
// upper the left side is 0, so lower must already be empty there. offset >= 0
// on the domain.
bool dominates(const Partition& upper, const Partition& lower, int offset) {
  for (int i = 1; i <= upper.length(); ++i)
    if (upper.part(i) < lower.part(i + offset)) return false;
  return lower.part(upper.length() + 1 + offset) == 0;
}

}  // namespace

bool is_flotw(const Multipartition& lambda, const DomainCharge& domain) {
  const auto& charge = domain.charge();
  if (lambda.level() != charge.level()) throw InputError("multipartition level differs from charge level");
  const int l = charge.level();
  const int e = charge.e;

  for (int j = 1; j < l; ++j)
    if (!dominates(lambda.component(j), lambda.component(j + 1), charge.at(j + 1) - charge.at(j))) return false;
  if (!dominates(lambda.component(l), lambda.component(1), e + charge.at(1) - charge.at(l))) return false;

  std::map<int, std::vector<bool>> residues_by_part;
  for (int j = 1; j <= l; ++j) {
    const auto& p = lambda.component(j);
    for (int i = 1; i <= p.length(); ++i) {
      auto& seen = residues_by_part.try_emplace(p.part(i), static_cast<std::size_t>(e), false).first->second;
      seen[static_cast<std::size_t>(mod_e(p.part(i) - i + charge.at(j), e))] = true;
    }
  }
  for (const auto& [part, seen] : residues_by_part) {
    bool all = true;
    for (bool hit : seen) all = all && hit;
    if (all) return false;
  }
  return true;
}

bool is_flotw(const Multipartition& lambda, const Charge& charge) { return is_flotw(lambda, DomainCharge(charge)); }

}  // namespace uglov
