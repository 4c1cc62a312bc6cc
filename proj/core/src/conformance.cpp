#include "uglov/conformance.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "uglov/error.hpp"
#include "uglov/io.hpp"

namespace uglov {

namespace {

using Kind = OneDimRep::Kind;

struct Cell {
  Charge charge;
  bool typeB_only = false;
};

struct CellResult {
  CheckTally trivial{"trivial-closed"};
  CheckTally sign{"sign-closed"};
  CheckTally typeB{"typeB"};
  std::vector<BranchTally> branches;
};

auto order_key(const Counterexample& c) {
  return std::make_tuple(c.rep.size, c.charge.level(), c.charge.e, c.charge.s, c.rep.kind, c.rep.comp, c.check);
}

void keep_smaller(std::optional<Counterexample>& slot, const std::optional<Counterexample>& candidate) {
  if (candidate && (!slot || order_key(*candidate) < order_key(*slot))) slot = candidate;
}

void merge(CheckTally& into, const CheckTally& from) {
  into.cases += from.cases;
  into.mismatches += from.mismatches;
  keep_smaller(into.smallest, from.smallest);
}

std::vector<BranchTally> empty_branches() {
  std::vector<BranchTally> out;
  for (const auto& info : typeB_branches()) out.push_back({info.branch});
  return out;
}

// Returns true on a mismatch.
bool record(CheckTally& tally, const OneDimRep& rep, const Charge& charge, const Multipartition& expected,
            const std::optional<Multipartition>& actual, const std::string& note) {
  ++tally.cases;
  if (actual && *actual == expected) return false;
  ++tally.mismatches;
  keep_smaller(tally.smallest, Counterexample{tally.check + note, rep, charge, expected,
                                              actual.value_or(Multipartition::empty(charge.level()))});
  return true;
}

template <class Route>
bool compare(CheckTally& tally, const OneDimRep& rep, const Charge& charge, const Multipartition& expected,
             Route&& route) {
  try {
    return record(tally, rep, charge, expected, route(), "");
  } catch (const Error& err) {
    return record(tally, rep, charge, expected, std::nullopt, std::string(" (threw: ") + err.what() + ")");
  }
}

CellResult run_cell(const Cell& cell, const VerifyOptions& opt) {
  CellResult out;
  out.branches = empty_branches();
  const auto& charge = cell.charge;
  const int l = charge.level();
  const auto general = [&](const OneDimRep& rep) {
    return opt.general ? opt.general(rep, charge) : label_general(rep, charge);
  };

  if (cell.typeB_only) {
    const int s1 = charge.at(1);
    const int s2 = charge.at(2);
    for (int n = 0; n <= opt.typeB_max_n; ++n)
      for (auto kind : {Kind::Trivial, Kind::Sign})
        for (int j = 1; j <= 2; ++j) {
          const OneDimRep rep{kind, j, n};
          const auto expected = general(rep);
          std::optional<TypeBLabel> traced;
          try {
            traced = opt.typeB ? opt.typeB(rep, s1, s2, charge.e) : label_typeB_traced(rep, s1, s2, charge.e);
          } catch (const Error& err) {
            record(out.typeB, rep, charge, expected, std::nullopt, std::string(" (threw: ") + err.what() + ")");
            continue;
          }
          const bool bad = record(out.typeB, rep, charge, expected, traced->label, "");
          auto& b = out.branches[static_cast<std::size_t>(traced->branch)];
          ++b.cases;
          if (b.min_n < 0 || n < b.min_n) b.min_n = n;
          b.max_n = std::max(b.max_n, n);
          if (bad) ++b.mismatches;
        }
    return out;
  }

  for (int n = 0; n <= opt.max_n; ++n)
    for (int j = 1; j <= l; ++j) {
      const OneDimRep row{Kind::Trivial, j, n};
      compare(out.trivial, row, charge, general(row), [&] {
        return opt.trivial_closed ? opt.trivial_closed(row, charge) : label_trivial_closed(row, charge);
      });
      const OneDimRep col{Kind::Sign, j, n};
      compare(out.sign, col, charge, general(col), [&] {
        return opt.sign_closed ? opt.sign_closed(col, charge) : label_sign_closed(col, charge);
      });
    }
  return out;
}

void box_charges(int level, int e, std::vector<int>& prefix, std::vector<Cell>& out, bool typeB_only) {
  if (static_cast<int>(prefix.size()) == level) {
    out.push_back({Charge(prefix, e), typeB_only});
    return;
  }
  for (int v = -2 * e; v <= 2 * e; ++v) {
    prefix.push_back(v);
    box_charges(level, e, prefix, out, typeB_only);
    prefix.pop_back();
  }
}

std::vector<Cell> make_cells(const VerifyOptions& opt) {
  std::vector<Cell> cells;
  for (int e = opt.min_e; e <= opt.max_e; ++e) {
    for (int l = 1; l <= opt.max_level; ++l) {
      if (l <= opt.exhaustive_level) {
        std::vector<int> prefix;
        box_charges(l, e, prefix, cells, false);
        continue;
      }
      std::mt19937_64 rng(opt.seed ^ (static_cast<std::uint64_t>(e) << 32) ^ static_cast<std::uint64_t>(l));
      std::uniform_int_distribution<int> entry(-2 * e, 2 * e);
      for (int t = 0; t < opt.samples; ++t) {
        std::vector<int> s(static_cast<std::size_t>(l));
        for (int& v : s) v = entry(rng);
        cells.push_back({Charge(std::move(s), e), false});
      }
    }
    std::vector<int> prefix;
    box_charges(2, e, prefix, cells, true);
  }
  return cells;
}

}  // namespace

std::optional<Counterexample> VerifyReport::first_failure() const {
  std::optional<Counterexample> out;
  keep_smaller(out, trivial.smallest);
  keep_smaller(out, sign.smallest);
  keep_smaller(out, typeB.smallest);
  return out;
}

VerifyReport verify_closed_formulas(const VerifyOptions& options) {
  if (options.min_e < 2 || options.max_e < options.min_e) throw InputError("e range must satisfy 2 <= min <= max");
  if (options.max_n < 0 || options.max_level < 1 || options.samples < 0)
    throw InputError("grid bounds must be non-negative and level at least 1");

  const auto cells = make_cells(options);
  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(cells.size());
  const auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      try {
        results[c] = run_cell(cells[c], options);
      } catch (...) {
        failures[c] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  VerifyReport report;
  report.branches = empty_branches();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!cells[c].typeB_only) ++report.charges;
    merge(report.trivial, results[c].trivial);
    merge(report.sign, results[c].sign);
    merge(report.typeB, results[c].typeB);
    for (std::size_t b = 0; b < report.branches.size(); ++b) {
      auto& into = report.branches[b];
      const auto& from = results[c].branches[b];
      into.cases += from.cases;
      into.mismatches += from.mismatches;
      if (from.min_n >= 0 && (into.min_n < 0 || from.min_n < into.min_n)) into.min_n = from.min_n;
      into.max_n = std::max(into.max_n, from.max_n);
    }
  }
  return report;
}

std::string describe(const Counterexample& cex) {
  std::ostringstream out;
  out << cex.check << ": " << (cex.rep.kind == Kind::Trivial ? "[n,j]" : "[1^n,j]") << " n=" << cex.rep.size
      << " j=" << cex.rep.comp << " charge=" << to_json(cex.charge) << " expected=" << to_json(cex.expected)
      << " got=" << to_json(cex.actual);
  return out.str();
}

std::string conformance_report(const VerifyReport& report, const VerifyOptions& options) {
  std::ostringstream out;
  out << "CONFORMANCE: level-two closed label formulas against the general crystal walk\n"
      << "grid: e in " << options.min_e << ".." << options.max_e << ", (s1,s2) in [-2e,2e]^2, n in 0.."
      << options.typeB_max_n << "\n\n";

  const auto pad = [](std::string_view text, std::size_t width) {
    std::string s(text);
    // Width counts code points so the non-ASCII ∅ lines up.
    std::size_t shown = 0;
    for (unsigned char ch : s) shown += (ch & 0xC0) != 0x80;
    if (shown < width) s.append(width - shown, ' ');
    return s;
  };
  std::size_t w_name = 6, w_pub = 9, w_impl = 11;
  const auto width = [](std::string_view text) {
    std::size_t n = 0;
    for (unsigned char ch : text) n += (ch & 0xC0) != 0x80;
    return n;
  };
  for (const auto& info : typeB_branches()) {
    w_name = std::max(w_name, width(info.name));
    w_pub = std::max(w_pub, width(info.published));
    w_impl = std::max(w_impl, width(info.implemented));
  }

  out << pad("branch", w_name) << " | " << pad("published", w_pub) << " | " << pad("implemented", w_impl)
      << " | status      | verified range     | cases | mismatches\n";
  out << std::string(w_name + w_pub + w_impl + 64, '-') << "\n";
  for (const auto& info : typeB_branches()) {
    const auto& tally = report.branches.at(static_cast<std::size_t>(info.branch));
    std::string range = tally.cases == 0 ? "not reached"
                                         : "e " + std::to_string(options.min_e) + ".." + std::to_string(options.max_e) +
                                               ", n " + std::to_string(tally.min_n) + ".." + std::to_string(tally.max_n);
    out << pad(info.name, w_name) << " | " << pad(info.published, w_pub) << " | " << pad(info.implemented, w_impl)
        << " | " << pad(info.deviates ? "corrected" : "as written", 11) << " | " << pad(range, 18) << " | "
        << tally.cases << " | " << tally.mismatches << "\n";
  }

  out << "\nsweeps (charge entries in [-2e,2e]; levels <= " << options.exhaustive_level << " exhaustive, levels up to "
      << options.max_level << " with " << options.samples << " seeded samples, seed " << options.seed << "; n in 0.."
      << options.max_n << "; " << report.charges << " charges)\n";
  for (const auto* tally : {&report.trivial, &report.sign, &report.typeB})
    out << "  " << pad(tally->check, 15) << " cases " << tally->cases << ", mismatches " << tally->mismatches << "\n";
  if (const auto cex = report.first_failure()) out << "\nsmallest counterexample: " << describe(*cex) << "\n";
  out << "\nresult: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace uglov
