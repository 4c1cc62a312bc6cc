#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "uglov/crystal.hpp"
#include "uglov/error.hpp"
#include "uglov/isomorphism.hpp"

using namespace uglov;

namespace {

const Multipartition kBig({{5, 5, 3, 1}, {3, 1}});
const Multipartition kSwapped({{5, 3, 1}, {5, 3, 1}});

std::vector<std::vector<int>> sample_charges(std::mt19937_64& rng, int l, int e, int count) {
  std::uniform_int_distribution<int> entry(-2 * e, 2 * e);
  std::vector<std::vector<int>> out;
  for (int k = 0; k < count; ++k) {
    std::vector<int> s(static_cast<std::size_t>(l));
    for (int& v : s) v = entry(rng);
    out.push_back(s);
  }
  return out;
}

AffineElement random_element(std::mt19937_64& rng, int l) {
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> shift(-1, 1);
  std::vector<int> y(static_cast<std::size_t>(l));
  for (int& v : y) v = shift(rng);
  return {perm, y};
}

}  // namespace

TEST_CASE("beta numbers") {
  CHECK(beta_numbers(Partition({5, 5, 3, 1}), 1, 5) == std::vector<int>{5, 4, 1, -2, -4});
  CHECK(beta_numbers(Partition({}), 0, 2) == std::vector<int>{-1, -2});
}

TEST_CASE("sigma transfer on the worked bipartition") {
  for (int e : {3, 4, 5, 7, 11}) REQUIRE(is_uglov(kBig, Charge({1, 0}, e)));
  CHECK_FALSE(is_uglov(kBig, Charge({1, 0}, 2)));

  const auto traced = chi_sigma_traced(kBig, std::vector<int>{1, 0}, 1);
  CHECK(traced.result == kSwapped);
  CHECK(traced.selections == std::vector<int>{4, 3, 2});
  for (int e : {4, 7}) CHECK(chi_generic(kBig, std::vector<int>{1, 0}, std::vector<int>{0, 1}, e) == kSwapped);

  CHECK(chi_sigma(kSwapped, std::vector<int>{0, 1}, 1) == kBig);
  CHECK(chi_sigma(kBig, std::vector<int>{2, 2}, 1) == kBig);
}

TEST_CASE("tau") {
  const Multipartition lambda({{4}, {2, 1}});
  CHECK(chi_tau(lambda) == Multipartition({{2, 1}, {4}}));
  CHECK(chi_generic(lambda, std::vector<int>{2, 0}, std::vector<int>{0, 6}, 4) == Multipartition({{2, 1}, {4}}));
  CHECK(chi_tau(Multipartition::empty(3)) == Multipartition::empty(3));
  CHECK(chi_tau(Multipartition({{3, 1}})) == Multipartition({{3, 1}}));
  CHECK(chi_tau_inverse(chi_tau(Multipartition({{1}, {2}, {3}}))) == Multipartition({{1}, {2}, {3}}));
}

TEST_CASE("chi_sigma equals the generic route on enumerated sets") {
  std::mt19937_64 rng(17);
  long cases = 0;
  for (int l = 2; l <= 3; ++l)
    for (int e = 2; e <= 5; ++e)
      for (const auto& s : sample_charges(rng, l, e, 12))
        for (int n = 0; n <= (l == 2 ? 7 : 5); ++n)
          for (const auto& lambda : enumerate_uglov(Charge(s, e), n))
            for (int i = 1; i < l; ++i) {
              auto target = s;
              std::swap(target[static_cast<std::size_t>(i - 1)], target[static_cast<std::size_t>(i)]);
              REQUIRE(chi_sigma(lambda, s, i) == chi_generic(lambda, s, target, e));
              ++cases;
            }
  CHECK(cases > 1000);
}

TEST_CASE("sigma step ignores e") {
  // λ Uglov for two values of e: the generic route must agree with the
  // e-free transfer for both.
  for (const auto& s : std::vector<std::vector<int>>{{1, 0}, {3, 0}, {0, 2}, {5, 1}})
    for (int n = 0; n <= 6; ++n)
      for (const auto& lambda : enumerate_uglov(Charge(s, 3), n)) {
        const auto fast = chi_sigma(lambda, s, 1);
        const std::vector<int> target{s[1], s[0]};
        for (int e = 4; e <= 6; ++e)
          if (is_uglov(lambda, Charge(s, e))) REQUIRE(chi_generic(lambda, s, target, e) == fast);
        REQUIRE(chi_generic(lambda, s, target, 3) == fast);
      }
}

TEST_CASE("chi through generators equals the generic route") {
  std::mt19937_64 rng(23);
  for (int l = 1; l <= 3; ++l)
    for (int e = 2; e <= 4; ++e)
      for (const auto& s : sample_charges(rng, l, e, 4))
        for (int trial = 0; trial < 4; ++trial) {
          const auto sigma = random_element(rng, l);
          const auto target = act_on_charge(sigma, s, e);
          for (int n = 0; n <= 5; ++n)
            for (const auto& lambda : enumerate_uglov(Charge(s, e), n)) {
              const auto moved = chi(lambda, s, sigma, e);
              REQUIRE(moved == chi_generic(lambda, s, target, e));
              REQUIRE(rank(moved) == n);
              REQUIRE(is_uglov(moved, Charge(target, e)));
            }
        }
  const Multipartition lambda({{4}, {2, 1}});
  CHECK(chi(lambda, std::vector<int>{2, 0}, AffineElement::identity(2), 4) == lambda);
  CHECK(chi(lambda, std::vector<int>{2, 0}, AffineElement::tau(2), 4) == chi_tau(lambda));
}

TEST_CASE("g-sequences are preserved and chi is functorial, n <= 6, level <= 3") {
  std::mt19937_64 rng(29);
  for (int l = 1; l <= 3; ++l)
    for (int e = 2; e <= 4; ++e)
      for (const auto& s : sample_charges(rng, l, e, 3)) {
        const auto a = random_element(rng, l);
        const auto b = random_element(rng, l);
        const auto s1 = act_on_charge(a, s, e);
        const auto s2 = act_on_charge(b, s1, e);
        for (int n = 0; n <= 6 - (l == 3); ++n)
          for (const auto& lambda : enumerate_uglov(Charge(s, e), n)) {
            const auto once = chi(lambda, s, a, e);
            REQUIRE(g_sequence(once, Charge(s1, e)) == g_sequence(lambda, Charge(s, e)));
            REQUIRE(chi(once, s1, b, e) == chi(lambda, s, compose(b, a), e));
          }
      }
}

TEST_CASE("orbit witness") {
  const std::vector<int> s{3, 0, 7, 3}, t{7, 0, 3, 3};
  const auto sigma = orbit_witness(s, t, 4);
  CHECK(act_on_charge(sigma, s, 4) == t);
  CHECK_THROWS_AS(orbit_witness(std::vector<int>{0, 1}, std::vector<int>{0, 2}, 4), OrbitMismatch);
  CHECK_THROWS_AS(chi_generic(Multipartition::empty(2), std::vector<int>{0, 1}, std::vector<int>{0, 2}, 4),
                  OrbitMismatch);
  CHECK_THROWS_AS(chi_generic(Multipartition({{1}, {1}}), std::vector<int>{0, 1}, std::vector<int>{1, 0}, 2),
                  NotUglovError);
}

TEST_CASE("transfer off the Uglov set reports it") {
  // The β-number 4 of (5) exceeds every β-number of the empty partition.
  CHECK_THROWS_AS(chi_sigma(Multipartition({{}, {5}}), std::vector<int>{1, 0}, 1), NotUglovError);
}
