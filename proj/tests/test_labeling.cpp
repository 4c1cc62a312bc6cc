#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "uglov/crystal.hpp"
#include "uglov/error.hpp"
#include "uglov/flotw.hpp"
#include "uglov/isomorphism.hpp"
#include "uglov/labeling.hpp"
#include "uglov/mullineux.hpp"

using namespace uglov;
using Kind = OneDimRep::Kind;

namespace {

const Charge kExa({3, 0, 7, 3}, 4);

Multipartition four(Partition a, Partition b, Partition c, Partition d) { return Multipartition({a, b, c, d}); }

// Starts of the blocks of equal entries of a weakly increasing charge.
std::vector<int> block_starts(const std::vector<int>& s) {
  std::vector<int> out{1};
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] != s[k - 1]) out.push_back(static_cast<int>(k) + 1);
  return out;
}

}  // namespace

TEST_CASE("residue classes") {
  const auto exa = residue_class_map(kExa);
  CHECK(exa.residues == std::vector<int>{0, 3});
  CHECK(exa.alpha_of(0) == 2);
  CHECK(exa.alpha_of(3) == 3);
  CHECK_FALSE(exa.contains(1));

  const auto single = residue_class_map(Charge({0}, 2));
  CHECK(single.residues == std::vector<int>{0});
  CHECK(single.alpha_of(0) == 1);
  CHECK(residue_class_map(Charge({0, 0}, 3)).alpha_of(0) == 1);
}

TEST_CASE("label sequences") {
  CHECK(label_sequence({Kind::Trivial, 1, 7}, Charge({6, 0}, 4)) == ResidueSequence{2, 3, 0, 1, 2, 3, 0});
  CHECK(label_sequence({Kind::Sign, 1, 3}, Charge({3}, 3)) == ResidueSequence{0, 2, 1});
  CHECK(label_sequence({Kind::Sign, 2, 0}, Charge({3, 1}, 3)).empty());
  CHECK_THROWS_AS(label_sequence({Kind::Sign, 3, 1}, Charge({3, 1}, 3)), InputError);
}

TEST_CASE("four-component example") {
  for (int n = 0; n <= 12; ++n) {
    const auto row2 = n <= 3 ? four({}, Partition::row(n), {}, {}) : four({}, {3}, Partition::row(n - 3), {});
    CHECK(label_general({Kind::Trivial, 2, n}, kExa) == row2);
    CHECK(label_trivial_closed({Kind::Trivial, 2, n}, kExa) == row2);
    for (int j : {1, 3, 4}) {
      CHECK(label_general({Kind::Trivial, j, n}, kExa) == four({}, {}, Partition::row(n), {}));
      CHECK(label_trivial_closed({Kind::Trivial, j, n}, kExa) == four({}, {}, Partition::row(n), {}));
    }
  }
  CHECK(label_general({Kind::Trivial, 2, 5}, kExa) == four({}, {3}, {2}, {}));
}

TEST_CASE("column labels around the four-component example") {
  // Sorting (3,0,7,3) by decreasing value gives (7,3,3,0); the transport
  // σ1σ2σ1 reaches (7,0,3,3), where column labels in component 2 split off
  // one box and leave a Mullineux row shape in component 1.
  const Charge moved({7, 0, 3, 3}, 4);
  for (int n = 1; n <= 12; ++n) {
    const auto expected = four(mullineux_typeA_row(n - 1, 4), {1}, {}, {});
    CHECK(label_general({Kind::Sign, 2, n}, moved) == expected);
    CHECK(label_sign_closed({Kind::Sign, 2, n}, moved) == expected);
    const auto sigma = AffineElement::permutation({3, 2, 1, 4});
    CHECK(act_on_charge(sigma, moved.s, 4) == kExa.s);
    CHECK(chi(expected, moved.s, sigma, 4) == label_general({Kind::Sign, 2, n}, kExa));
  }
  CHECK(label_general({Kind::Sign, 1, 4}, kExa) == four({}, {}, {2, 1, 1}, {}));
  CHECK(label_general({Kind::Sign, 1, 12}, kExa) == four({}, {}, {4, 4, 4}, {}));
  CHECK(label_sign_closed({Kind::Sign, 1, 12}, kExa) == four({}, {}, {4, 4, 4}, {}));
  CHECK(label_general({Kind::Sign, 1, 7}, moved) == four(mullineux_typeA_row(7, 4), {}, {}, {}));
}

TEST_CASE("level two closed formulas") {
  for (int e = 2; e <= 5; ++e)
    for (int n = 0; n <= 9; ++n)
      for (int s : {-3, 0, 4}) {
        CHECK(label_typeB({Kind::Trivial, 1, n}, s, s, e) == Multipartition({Partition::row(n), {}}));
        CHECK(label_typeB({Kind::Trivial, 2, n}, s, s, e) == Multipartition({Partition::row(n), {}}));
        CHECK(label_typeB({Kind::Sign, 1, n}, s, s, e) == Multipartition({mullineux_typeA_row(n, e), {}}));
        CHECK(label_typeB({Kind::Sign, 2, n}, s, s, e) == Multipartition({mullineux_typeA_row(n, e), {}}));
      }
  const OneDimRep col{Kind::Sign, 2, 4};
  CHECK(label_typeB(col, 0, 1, 3) == Multipartition({{2}, {2}}));
  CHECK(label_general(col, Charge({0, 1}, 3)) == Multipartition({{2}, {2}}));
  CHECK(label_typeB_traced(col, 0, 1, 3).branch == TypeBBranch::SecondNearColumnSecondHigh);
  CHECK(label_typeB({Kind::Sign, 2, 4}, 0, 1, 2) == label_general({Kind::Sign, 2, 4}, Charge({0, 1}, 2)));
  CHECK_THROWS_AS(label_typeB({Kind::Sign, 3, 4}, 0, 1, 3), InputError);

  CHECK(typeB_branches().size() == 19);
  for (std::size_t k = 0; k < typeB_branches().size(); ++k)
    CHECK(static_cast<std::size_t>(typeB_branches()[k].branch) == k);
}

TEST_CASE("closed routes agree with the crystal walk on a small grid") {
  std::mt19937_64 rng(41);
  for (int l = 1; l <= 4; ++l)
    for (int e = 2; e <= 5; ++e) {
      std::uniform_int_distribution<int> entry(-2 * e, 2 * e);
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> s(static_cast<std::size_t>(l));
        for (int& v : s) v = entry(rng);
        const Charge charge(s, e);
        for (int n = 0; n <= 10; ++n)
          for (int j = 1; j <= l; ++j) {
            const OneDimRep row{Kind::Trivial, j, n}, col{Kind::Sign, j, n};
            REQUIRE(label_trivial_closed(row, charge) == label_general(row, charge));
            REQUIRE(label_sign_closed(col, charge) == label_general(col, charge));
            if (l == 2) {
              REQUIRE(label_typeB(row, s[0], s[1], e) == label_general(row, charge));
              REQUIRE(label_typeB(col, s[0], s[1], e) == label_general(col, charge));
            }
          }
      }
    }
}

TEST_CASE("labels are Uglov, FLOTW on the domain, and depend on j only through s_j mod e") {
  std::mt19937_64 rng(43);
  for (int l = 1; l <= 4; ++l)
    for (int e = 2; e <= 5; ++e) {
      std::uniform_int_distribution<int> entry(-3 * e, 3 * e);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> s(static_cast<std::size_t>(l));
        for (int& v : s) v = entry(rng);
        const Charge charge(s, e);
        const auto domain = DomainCharge::make(charge);
        for (int n = 0; n <= 12; ++n)
          for (int j = 1; j <= l; ++j)
            for (auto kind : {Kind::Trivial, Kind::Sign}) {
              const auto label = label_general({kind, j, n}, charge);
              REQUIRE(rank(label) == n);
              REQUIRE(is_uglov(label, charge));
              if (domain) REQUIRE(is_flotw(label, *domain));
              for (int k = 1; k <= l; ++k)
                if (mod_e(s[static_cast<std::size_t>(k - 1)], e) == mod_e(s[static_cast<std::size_t>(j - 1)], e))
                  REQUIRE(label_general({kind, k, n}, charge) == label);
            }
      }
    }
}

TEST_CASE("trivial labels on the domain are the rows themselves; column labels are Mullineux images") {
  for (int l = 1; l <= 3; ++l)
    for (int e = 2; e <= 4; ++e)
      for (const auto& s : oracle::fundamental_charges(l, e)) {
        const Charge charge(s, e);
        const auto starts = block_starts(s);
        for (int n = 0; n <= 8; ++n)
          for (std::size_t b = 0; b < starts.size(); ++b) {
            const int first = starts[b];
            const int next = b + 1 < starts.size() ? starts[b + 1] : l + 1;
            for (int i = first; i < next; ++i)
              REQUIRE(label_general({Kind::Trivial, i, n}, charge) == Multipartition::single(l, first, Partition::row(n)));
            const auto row = Multipartition::single(l, l + 2 - next, Partition::row(n));
            REQUIRE(label_general({Kind::Sign, first, n}, charge) == mullineux(row, negated_charge(charge)));
          }
      }
}

TEST_CASE("label set") {
  const auto set = one_dim_label_set(Charge({0, 1}, 2), 5);
  REQUIRE(set.entries.size() == 4);
  for (int j = 0; j < 2; ++j) CHECK(set.entries[static_cast<std::size_t>(j)].label == set.entries[static_cast<std::size_t>(j + 2)].label);
  CHECK(set.distinct.size() <= 2);

  const auto empty = one_dim_label_set(Charge({0, 4, 1}, 5), 0);
  CHECK(empty.distinct == std::vector<Multipartition>{Multipartition::empty(3)});

  const auto domain = one_dim_label_set(Charge({0, 1, 1}, 3), 4);
  CHECK(domain.entries[0].label == Multipartition({{4}, {}, {}}));
  CHECK(domain.entries[1].label == Multipartition({{}, {4}, {}}));
  CHECK(domain.entries[2].label == Multipartition({{}, {4}, {}}));
}

TEST_CASE("e = 2 collapses rows and columns") {
  for (int s1 = -4; s1 <= 4; ++s1)
    for (int s2 = -4; s2 <= 4; ++s2)
      for (int n = 0; n <= 12; ++n)
        for (int j = 1; j <= 2; ++j)
          REQUIRE(label_general({Kind::Trivial, j, n}, Charge({s1, s2}, 2)) ==
                  label_general({Kind::Sign, j, n}, Charge({s1, s2}, 2)));
}
