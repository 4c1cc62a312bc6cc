#pragma once

// Grid sweeps comparing the closed label formulas with label_general, and the
// CONFORMANCE table they feed.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uglov/labeling.hpp"

namespace uglov {

struct VerifyOptions {
  int max_n = 12;
  int typeB_max_n = 15;
  int min_e = 2;
  int max_e = 5;
  int max_level = 4;
  /// Levels up to this one get every charge in [-2e, 2e]^l; higher levels
  /// get `samples` random charges from that box.
  int exhaustive_level = 2;
  int samples = 500;
  std::uint64_t seed = 20240611;
  unsigned threads = 0;  // 0: hardware concurrency

  // Replacements for the routes under test; empty means the library's own.
  std::function<Multipartition(const OneDimRep&, const Charge&)> general;
  std::function<Multipartition(const OneDimRep&, const Charge&)> trivial_closed;
  std::function<Multipartition(const OneDimRep&, const Charge&)> sign_closed;
  std::function<TypeBLabel(const OneDimRep&, int, int, int)> typeB;
};

struct Counterexample {
  std::string check;
  OneDimRep rep;
  Charge charge;
  Multipartition expected;  // label_general
  Multipartition actual;
};

struct CheckTally {
  explicit CheckTally(std::string name = {}) : check(std::move(name)) {}

  std::string check;
  long long cases = 0;
  long long mismatches = 0;
  std::optional<Counterexample> smallest;
};

struct BranchTally {
  TypeBBranch branch;
  long long cases = 0;
  long long mismatches = 0;
  int min_n = -1;
  int max_n = -1;
};

struct VerifyReport {
  CheckTally trivial{"trivial-closed"};
  CheckTally sign{"sign-closed"};
  CheckTally typeB{"typeB"};
  std::vector<BranchTally> branches;  // indexed by TypeBBranch
  long long charges = 0;

  bool ok() const { return trivial.mismatches + sign.mismatches + typeB.mismatches == 0; }
  /// The smallest counterexample over all checks.
  std::optional<Counterexample> first_failure() const;
};

VerifyReport verify_closed_formulas(const VerifyOptions& options = {});

/// Plain-text table: one row per type-B branch with the published formula,
/// the implemented condition and the verified range, then the sweep totals.
std::string conformance_report(const VerifyReport& report, const VerifyOptions& options);

std::string describe(const Counterexample& cex);

}  // namespace uglov
