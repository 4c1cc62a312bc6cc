#include "uglov/mullineux.hpp"

#include <algorithm>

#include "uglov/crystal.hpp"
#include "uglov/error.hpp"

namespace uglov {

Charge negated_charge(const Charge& charge) {
  std::vector<int> s(charge.s.rbegin(), charge.s.rend());
  for (int& v : s) v = -v;
  return {std::move(s), charge.e};
}

Multipartition mullineux(const Multipartition& lambda, const Charge& charge) {
  auto g = g_sequence(lambda, charge);
  for (int& k : g) k = mod_e(-k, charge.e);
  return build_from_sequence(g, negated_charge(charge));
}

Partition mullineux_typeA_row(int n, int e) {
  if (n < 0) throw InputError("n must be non-negative");
  if (e < 2) throw InputError("e must be at least 2");
  const int q = n / (e - 1);
  const int r = n % (e - 1);
  std::vector<int> parts(static_cast<std::size_t>(r), q + 1);
  if (q > 0) parts.insert(parts.end(), static_cast<std::size_t>(e - 1 - r), q);
  return Partition(std::move(parts));
}

}  // namespace uglov
