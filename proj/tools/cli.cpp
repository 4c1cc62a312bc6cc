#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "uglov/affine.hpp"
#include "uglov/crystal.hpp"
#include "uglov/error.hpp"
#include "uglov/flotw.hpp"
#include "uglov/io.hpp"
#include "uglov/isomorphism.hpp"
#include "uglov/labeling.hpp"
#include "uglov/mullineux.hpp"

namespace uglov::cli {

namespace {

// Raised when two routes that must agree do not.
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lambda;
  std::string s;
  int e = 0;
  int i = -1;
  bool add = false;
  bool remove = false;
  bool json = false;
  bool display = false;
  bool flotw = false;
  bool peel = false;
  bool count = false;
  std::string g;
  int n = -1;
  int j = 0;
  std::string to;
  std::string sigma;
  bool check = false;
  bool closed = false;
  bool typeB = false;
  bool trivial = false;
  bool sign = false;
  std::string report;
  VerifyOptions verify;
};

Charge charge_of(const Options& o) {
  auto s = parse_int_list(o.s);
  if (o.e < 2) throw InputError("--e: must be at least 2");
  return Charge(std::move(s), o.e);
}

Multipartition lambda_of(const Options& o, const Charge& charge) {
  auto lambda = parse_multipartition(o.lambda);
  if (lambda.level() != charge.level())
    throw InputError("--l: level " + std::to_string(lambda.level()) + " differs from charge level " +
                     std::to_string(charge.level()));
  return lambda;
}

int residue_of(const Options& o) {
  if (o.i < 0 || o.i >= o.e) throw InputError("--i: residue must lie in [0, e)");
  return o.i;
}

std::string render(const Multipartition& lambda, const Options& o) {
  return o.display && !o.json ? to_display(lambda) : to_json(lambda);
}

int cmd_good(const Options& o, std::ostream& out) {
  const auto charge = charge_of(o);
  const auto lambda = lambda_of(o, charge);
  const int i = residue_of(o);
  if (o.add == o.remove) throw InputError("good: pass exactly one of --add, --remove");
  const auto node = o.add ? good_addable_node(lambda, charge, i) : good_removable_node(lambda, charge, i);
  if (o.json)
    out << (node ? to_json(*node) : "null") << "\n";
  else
    out << (node ? to_display(*node) : "none") << "\n";
  return kOk;
}

int cmd_word(const Options& o, std::ostream& out) {
  const auto charge = charge_of(o);
  const auto lambda = lambda_of(o, charge);
  const auto word = i_word(lambda, charge, residue_of(o));
  const auto letters = word.letters();
  const auto reduced = reduce_word(letters);
  if (o.json) {
    std::string nodes = "[";
    for (std::size_t k = 0; k < word.entries.size(); ++k)
      nodes += (k ? "," : "") + to_json(word.entries[k].node);
    nodes += "]";
    out << R"({"word":")" << letters << R"(","nodes":)" << nodes << R"(,"reduced":{"A":)" << reduced.addable
        << R"(,"R":)" << reduced.removable << "}}\n";
    return kOk;
  }
  out << letters;
  for (const auto& entry : word.entries) out << " " << static_cast<char>(entry.letter) << to_display(entry.node);
  out << " -> A^" << reduced.addable << " R^" << reduced.removable << "\n";
  return kOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  const auto charge = charge_of(o);
  const auto lambda = lambda_of(o, charge);
  const bool member = o.flotw ? is_flotw(lambda, charge) : is_uglov(lambda, charge);
  out << (member ? "true" : "false") << "\n";
  return kOk;
}

int cmd_gseq(const Options& o, std::ostream& out) {
  const auto charge = charge_of(o);
  const auto lambda = lambda_of(o, charge);
  if (o.peel) {
    const auto result = peel(lambda, charge);
    out << R"({"apex":)" << to_json(result.apex) << R"(,"g":)" << to_json(result.g) << "}\n";
    return kOk;
  }
  out << to_json(g_sequence(lambda, charge)) << "\n";
  return kOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  const auto charge = charge_of(o);
  out << render(build_from_sequence(residues_from_json(o.g, charge.e), charge), o) << "\n";
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto charge = charge_of(o);
  if (o.n < 0) throw InputError("-n: must be non-negative");
  const auto all = enumerate_uglov(charge, o.n);
  if (o.count) {
    out << all.size() << "\n";
  } else if (o.json) {
    out << "[";
    for (std::size_t k = 0; k < all.size(); ++k) out << (k ? "," : "") << to_json(all[k]);
    out << "]\n";
  } else {
    for (const auto& lambda : all) out << render(lambda, o) << "\n";
  }
  return kOk;
}

int cmd_iso(const Options& o, std::ostream& out) {
  const auto charge = charge_of(o);
  const auto lambda = lambda_of(o, charge);
  if (o.to.empty() == o.sigma.empty()) throw InputError("iso: pass exactly one of --to, --sigma");
  const auto sigma = o.sigma.empty() ? orbit_witness(charge.s, parse_int_list(o.to), charge.e) : affine_from_json(o.sigma);
  if (sigma.level() != charge.level()) throw InputError("--sigma: level differs from charge level");
  if (!is_uglov(lambda, charge)) throw NotUglovError("--l: not in the Uglov set for this charge");
  const auto target = act_on_charge(sigma, charge.s, charge.e);
  const auto result = chi(lambda, charge.s, sigma, charge.e);
  if (o.check) {
    const auto generic = chi_generic(lambda, charge.s, target, charge.e);
    if (generic != result)
      throw ContractViolation("iso: fast path gave " + to_json(result) + ", generic route gave " + to_json(generic));
  }
  out << render(result, o) << "\n";
  return kOk;
}

int cmd_mullineux(const Options& o, std::ostream& out) {
  const auto charge = charge_of(o);
  out << render(mullineux(lambda_of(o, charge), charge), o) << "\n";
  return kOk;
}

int cmd_label(const Options& o, std::ostream& out) {
  const auto charge = charge_of(o);
  if (o.trivial == o.sign) throw InputError("label: pass exactly one of --trivial, --sign");
  if (o.n < 0) throw InputError("-n: must be non-negative");
  if (o.j < 1 || o.j > charge.level()) throw InputError("-j: component must lie in 1..l");
  const OneDimRep rep{o.trivial ? OneDimRep::Kind::Trivial : OneDimRep::Kind::Sign, o.j, o.n};
  if (o.typeB && charge.level() != 2) throw InputError("--typeb: needs a charge of level 2");

  const auto closed = [&] {
    if (o.typeB) return label_typeB(rep, charge.at(1), charge.at(2), charge.e);
    return o.trivial ? label_trivial_closed(rep, charge) : label_sign_closed(rep, charge);
  };
  Multipartition result;
  if (o.check) {
    result = label_general(rep, charge);
    const auto other = closed();
    if (other != result)
      throw ContractViolation("label: closed formula gave " + to_json(other) + ", general route gave " +
                              to_json(result));
  } else {
    result = o.closed || o.typeB ? closed() : label_general(rep, charge);
  }
  out << render(result, o) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err, const Hooks* hooks) {
  VerifyOptions options = o.verify;
  if (options.typeB_max_n < 0) options.typeB_max_n = options.max_n + 3;
  if (hooks) {
    options.general = hooks->verify_routes.general;
    options.trivial_closed = hooks->verify_routes.trivial_closed;
    options.sign_closed = hooks->verify_routes.sign_closed;
    options.typeB = hooks->verify_routes.typeB;
  }
  const auto report = verify_closed_formulas(options);
  const auto text = conformance_report(report, options);
  if (o.report.empty() || o.report == "-") {
    out << text;
  } else {
    std::ofstream file(o.report);
    if (!file) throw InputError("--report: cannot open " + o.report);
    file << text;
    out << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  }
  if (report.ok()) return kOk;
  err << "counterexample: " << describe(*report.first_failure()) << "\n";
  return kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks* hooks) {
  CLI::App app{"Crystal combinatorics of Uglov multipartitions", "uglov"};
  app.require_subcommand(1);
  Options o;
  o.verify.typeB_max_n = -1;

  const auto charge_flags = [&](CLI::App* cmd) {
    cmd->add_option("--s", o.s, "charge entries, comma separated")->required();
    cmd->add_option("--e", o.e, "order of the root of unity (>= 2)")->required();
  };
  const auto lambda_flag = [&](CLI::App* cmd) {
    cmd->add_option("--l", o.lambda, "multipartition, JSON or display form")->required();
  };
  const auto format_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "JSON output");
    cmd->add_flag("--display", o.display, "display form 5.5.3.1|3.1");
  };

  auto* good = app.add_subcommand("good", "good addable or removable i-node");
  lambda_flag(good);
  charge_flags(good);
  good->add_option("--i", o.i, "residue")->required();
  good->add_flag("--add", o.add);
  good->add_flag("--remove", o.remove);
  good->add_flag("--json", o.json);

  auto* word = app.add_subcommand("word", "i-word and its reduction");
  lambda_flag(word);
  charge_flags(word);
  word->add_option("--i", o.i, "residue")->required();
  word->add_flag("--json", o.json);

  auto* member = app.add_subcommand("member", "membership in the Uglov set");
  lambda_flag(member);
  charge_flags(member);
  member->add_flag("--flotw", o.flotw, "use the FLOTW conditions (charge must lie in the domain)");
  member->add_flag("--json", o.json);

  auto* gseq = app.add_subcommand("gseq", "canonical residue sequence");
  lambda_flag(gseq);
  charge_flags(gseq);
  gseq->add_flag("--peel", o.peel, "print apex and sequence even off the Uglov set");
  gseq->add_flag("--json", o.json);

  auto* build = app.add_subcommand("build", "multipartition from a residue sequence");
  build->add_option("--g", o.g, "residue sequence as JSON array")->required();
  charge_flags(build);
  format_flags(build);

  auto* enumerate = app.add_subcommand("enumerate", "all Uglov multipartitions of rank n");
  charge_flags(enumerate);
  enumerate->add_option("-n", o.n, "rank")->required();
  enumerate->add_flag("--count", o.count, "print only the number of elements");
  format_flags(enumerate);

  auto* iso = app.add_subcommand("iso", "crystal isomorphism to another charge of the orbit");
  lambda_flag(iso);
  charge_flags(iso);
  iso->add_option("--to", o.to, "target charge, comma separated");
  iso->add_option("--sigma", o.sigma, R"(group element {"perm":[...],"shift":[...]})");
  iso->add_flag("--check", o.check, "compare with the generic route");
  format_flags(iso);

  auto* mull = app.add_subcommand("mullineux", "generalised Mullineux image");
  lambda_flag(mull);
  charge_flags(mull);
  format_flags(mull);

  auto* label = app.add_subcommand("label", "label of a one-dimensional representation");
  label->add_flag("--trivial", o.trivial, "row representation [n,j]");
  label->add_flag("--sign", o.sign, "column representation [1^n,j]");
  label->add_option("-j", o.j, "component, 1-based")->required();
  label->add_option("-n", o.n, "size")->required();
  charge_flags(label);
  label->add_flag("--closed", o.closed, "closed formulas instead of the crystal walk");
  label->add_flag("--typeb", o.typeB, "level-two closed formulas");
  label->add_flag("--check", o.check, "run both routes and compare");
  format_flags(label);

  auto* verify = app.add_subcommand("verify", "closed formulas against the crystal walk over a grid");
  verify->add_option("--max-n", o.verify.max_n, "largest n")->capture_default_str();
  verify->add_option("--typeb-max-n", o.verify.typeB_max_n, "largest n for level two (default max-n + 3)");
  verify->add_option("--min-e", o.verify.min_e)->capture_default_str();
  verify->add_option("--max-e", o.verify.max_e)->capture_default_str();
  verify->add_option("--max-level", o.verify.max_level)->capture_default_str();
  verify->add_option("--samples", o.verify.samples, "random charges per (e, level) above level 2")->capture_default_str();
  verify->add_option("--seed", o.verify.seed)->capture_default_str();
  verify->add_option("--threads", o.verify.threads, "0 = all cores")->capture_default_str();
  verify->add_option("--report", o.report, "write the CONFORMANCE table here (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const auto* cmd = app.get_subcommands().front();
    const auto name = cmd->get_name();
    if (name == "good") return cmd_good(o, out);
    if (name == "word") return cmd_word(o, out);
    if (name == "member") return cmd_member(o, out);
    if (name == "gseq") return cmd_gseq(o, out);
    if (name == "build") return cmd_build(o, out);
    if (name == "enumerate") return cmd_enumerate(o, out);
    if (name == "iso") return cmd_iso(o, out);
    if (name == "mullineux") return cmd_mullineux(o, out);
    if (name == "label") return cmd_label(o, out);
    if (name == "verify") return cmd_verify(o, out, err, hooks);
    err << "error: unknown command " << name << "\n";
    return kInputError;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << "\n";
    return kContractViolation;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const StepFailure& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotUglovError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const OrbitMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kContractViolation;
  }
}

}  // namespace uglov::cli
