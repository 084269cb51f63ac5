/* SPDX-License-Identifier: Apache-2.0 */

#include "exactreal/cli/commands.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "exactreal/cli/spec_lang.hpp"
#include "exactreal/natcomp.hpp"

namespace exactreal::cli {

namespace {

constexpr std::uint64_t kDefaultRefineFuel = 200;
constexpr std::uint64_t kDefaultNatFuel = 1000000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p/q", "n", or the dyadic shorthand "2^k" / "2^-k".
Rational parse_number(const std::optional<std::string>& text, const char* flag) {
  if (!text) throw UsageError(std::string("missing required flag --") + flag);
  const std::string& s = *text;
  if (s.rfind("2^", 0) == 0) {
    std::string e = s.substr(2);
    std::size_t k = (!e.empty() && (e[0] == '-' || e[0] == '+')) ? 1 : 0;
    bool ok = k < e.size() && e.size() - k <= 9;
    for (std::size_t i = k; ok && i < e.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(e[i]));
    if (!ok) throw UsageError(std::string("bad dyadic value for --") + flag + ": " + s);
    return Rational::pow2(std::stol(e));
  }
  auto r = Rational::try_parse(s);
  if (!r) throw UsageError(std::string("bad rational for --") + flag + ": " + s);
  return *r;
}

Rational positive(const std::optional<std::string>& text, const char* flag) {
  Rational r = parse_number(text, flag);
  if (r.sign() <= 0) throw UsageError(std::string("--") + flag + " must be positive");
  return r;
}

SpecAst load_spec(const Command& cmd) {
  if (cmd.spec_text) return parse_spec(*cmd.spec_text);
  if (!cmd.spec_file) throw UsageError("missing --spec FILE (or --expr TEXT)");
  std::ifstream in(*cmd.spec_file);
  if (!in) throw UsageError("cannot read spec file " + *cmd.spec_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

template <class T>
const T& expect_kind(const SpecAst& spec, const char* what) {
  if (const auto* s = std::get_if<T>(&spec)) return *s;
  throw UsageError(std::string("this command needs ") + what);
}

Fuel refine_fuel(const Command& cmd) { return Fuel(cmd.fuel.value_or(kDefaultRefineFuel)); }

const char* bool_str(bool b) { return b ? "true" : "false"; }

void print_no_convergence(std::ostream& out, const NoConvergence& nc) {
  out << "no-convergence steps=" << nc.steps_taken << " all_infinite=" << bool_str(nc.all_infinite) << "\n";
}

std::vector<RealOracle> expr_args(const Command& cmd, std::size_t arity) {
  if (arity > 2) throw UsageError("only expressions of arity 1 or 2 can be driven from the command line");
  std::vector<RealOracle> args{from_rational(parse_number(cmd.x, "x"))};
  if (arity == 2) args.push_back(from_rational(parse_number(cmd.y, "y")));
  return args;
}

int cmd_eval(const Command& cmd, std::ostream& out) {
  auto ast = load_spec(cmd);
  const auto& spec = expect_kind<ExprSpec>(ast, "an expression spec");
  auto args = expr_args(cmd, spec.arity);
  auto outcome = refine(build_machine(spec), args, positive(cmd.accuracy, "accuracy"), refine_fuel(cmd));
  if (auto* c = std::get_if<Converged>(&outcome)) {
    out << "r=" << c->r << " eps=" << c->eps << "\n";
    return kOk;
  }
  print_no_convergence(out, std::get<NoConvergence>(outcome));
  return kNoResult;
}

int cmd_domain(const Command& cmd, std::ostream& out) {
  auto ast = load_spec(cmd);
  const auto& spec = expect_kind<ExprSpec>(ast, "an expression spec");
  auto args = expr_args(cmd, spec.arity);
  auto outcome = domain_neighborhood(build_machine(spec), args, refine_fuel(cmd));
  if (auto* nb = std::get_if<Neighborhood>(&outcome)) {
    for (std::size_t k = 0; k < nb->size(); ++k)
      out << "arg=" << k << " lo=" << (*nb)[k].lo() << " hi=" << (*nb)[k].hi() << "\n";
    return kOk;
  }
  print_no_convergence(out, std::get<NoConvergence>(outcome));
  return kNoResult;
}

int cmd_enumerate(const Command& cmd, std::ostream& out) {
  auto ast = load_spec(cmd);
  auto rel = build_relation(expect_kind<RelSpec>(ast, "a relation spec"));
  Rational acc = positive(cmd.accuracy, "accuracy");
  auto list = enumerate(rel, from_rational(parse_number(cmd.x, "x")), acc, cmd.max_index.value_or(10),
                        refine_fuel(cmd));
  std::size_t e = 0, s = 0;
  auto last = rel.omega().clip(cmd.max_index.value_or(10));
  for (std::uint64_t i = 0; last && i <= *last; ++i) {
    if (e < list.entries.size() && list.entries[e].index == i) {
      const auto& w = list.entries[e++];
      out << "index=" << i << " r=" << w.r << " eps=" << w.eps << "\n";
    } else if (s < list.skipped.size() && list.skipped[s] == i) {
      ++s;
      out << "index=" << i << " skipped\n";
    }
  }
  auto clusters = cluster_witnesses(list.entries, acc * Rational(2));
  out << "clusters=" << clusters.size();
  for (std::size_t k = 0; k < clusters.size(); ++k) out << (k == 0 ? " at=" : ",") << clusters[k];
  out << "\n";
  return kOk;
}

int cmd_member(const Command& cmd, std::ostream& out) {
  auto ast = load_spec(cmd);
  auto rel = build_relation(expect_kind<RelSpec>(ast, "a relation spec"));
  auto outcome = member_semi(rel, from_rational(parse_number(cmd.x, "x")), from_rational(parse_number(cmd.y, "y")),
                             positive(cmd.accuracy, "accuracy"), cmd.max_index.value_or(10), refine_fuel(cmd));
  if (auto* f = std::get_if<Found>(&outcome)) {
    out << "result=found index=" << f->index << "\n";
    return kOk;
  }
  out << "result=exhausted searched=" << std::get<Exhausted>(outcome).searched << "\n";
  return kNoResult;
}

int cmd_sample(const Command& cmd, std::ostream& out) {
  auto ast = load_spec(cmd);
  auto alg = build_prob(expect_kind<ProbSpec>(ast, "a prob spec"));
  Sampler sampler(cmd.seed);
  auto x = from_rational(parse_number(cmd.x, "x"));
  Rational acc = positive(cmd.accuracy, "accuracy");
  for (std::uint64_t k = 0; k < cmd.n; ++k) {
    auto s = sample(alg, x, sampler, acc, refine_fuel(cmd));
    out << "index=" << s.index << " r=" << s.r << "\n";
  }
  return kOk;
}

int cmd_mass(const Command& cmd, std::ostream& out) {
  auto ast = load_spec(cmd);
  auto alg = build_prob(expect_kind<ProbSpec>(ast, "a prob spec"));
  auto rep = outcome_mass(alg, from_rational(parse_number(cmd.x, "x")), from_rational(parse_number(cmd.y, "y")),
                          positive(cmd.accuracy, "accuracy"), refine_fuel(cmd));
  out << "lower=" << rep.lower << " unknown=" << rep.unknown << "\n";
  return kOk;
}

int cmd_freq(const Command& cmd, std::ostream& out) {
  auto ast = load_spec(cmd);
  auto alg = build_prob(expect_kind<ProbSpec>(ast, "a prob spec"));
  Sampler sampler(cmd.seed);
  auto rep = empirical_frequency(alg, from_rational(parse_number(cmd.x, "x")), cmd.n, sampler,
                                 positive(cmd.accuracy, "accuracy"), refine_fuel(cmd));
  for (std::size_t i = 0; i < rep.counts.size(); ++i)
    out << "index=" << i << " count=" << rep.counts[i] << " mass=" << alg.branches()[i].mass << "\n";
  return kOk;
}

int cmd_natcheck(const Command& cmd, std::ostream& out) {
  if (!cmd.relation) throw UsageError("missing required flag --relation");
  auto rel = nat::catalog_relation(*cmd.relation);
  if (!rel) throw UsageError("unknown relation '" + *cmd.relation + "'");
  std::uint64_t fuel = cmd.fuel.value_or(kDefaultNatFuel);
  std::uint64_t total = 0, agree = 0;
  if (cmd.construction == "roundtrip") {
    auto rep = nat::equivalence_report(*rel, cmd.bound, fuel);
    total = rep.total;
    agree = rep.full_agreement() ? rep.agreements : rep.agreements - rep.false_accepts;
  } else if (cmd.construction == "dec-to-semi") {
    auto semi = nat::dec_to_semi(*rel);
    for (nat::Natural x = 0; x <= cmd.bound; ++x)
      for (nat::Natural y = 0; y <= cmd.bound; ++y, ++total)
        if (rel->char_fn(x, y) == semi.run(x, y, fuel).has_value()) ++agree;
  } else if (cmd.construction == "semi-to-enum") {
    // Every enumerated value is a member, and every member <= bound shows up within fuel.
    auto e = nat::semi_to_enum(nat::dec_to_semi(*rel));
    for (nat::Natural x = 0; x <= cmd.bound; ++x) {
      std::vector<bool> seen(cmd.bound + 1, false);
      bool sound = true;
      for (std::uint64_t j = 0; j <= fuel; ++j)
        if (auto y = e.enumerate(x, j)) {
          sound = sound && rel->char_fn(x, *y);
          if (*y <= cmd.bound) seen[*y] = true;
        }
      for (nat::Natural y = 0; y <= cmd.bound; ++y, ++total)
        if (sound && seen[y] == rel->char_fn(x, y)) ++agree;
    }
  } else {
    throw UsageError("unknown construction '" + cmd.construction + "'");
  }
  out << (agree == total ? "OK " : "FAIL ") << agree << "/" << total << "\n";
  return agree == total ? kOk : kNoResult;
}

}  // namespace

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.name == "eval") return cmd_eval(cmd, out);
    if (cmd.name == "domain") return cmd_domain(cmd, out);
    if (cmd.name == "enumerate") return cmd_enumerate(cmd, out);
    if (cmd.name == "member") return cmd_member(cmd, out);
    if (cmd.name == "sample") return cmd_sample(cmd, out);
    if (cmd.name == "mass") return cmd_mass(cmd, out);
    if (cmd.name == "freq") return cmd_freq(cmd, out);
    if (cmd.name == "natcheck") return cmd_natcheck(cmd, out);
    err << "error: unknown subcommand '" << cmd.name << "'\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DivergenceError& e) {
    out << "no-convergence steps=" << e.steps_taken() << " all_infinite=" << bool_str(e.all_infinite()) << "\n";
    return kNoResult;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact real computation workbench"};
  app.require_subcommand(1);
  Command cmd;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", cmd.spec_file, "Machine spec file");
    sub->add_option("--expr", cmd.spec_text, "Machine spec given inline");
  };
  auto add_refine = [&](CLI::App* sub) {
    sub->add_option("--accuracy", cmd.accuracy, "Target accuracy, p/q or 2^-k");
    sub->add_option("--fuel", cmd.fuel, "Refinement step budget");
  };
  struct Sub {
    const char* name;
    const char* help;
    bool y, max_index, sampling;
  };
  const Sub subs[] = {
      {"eval", "Refine an expression at a rational point", true, false, false},
      {"domain", "Extract a neighborhood on which an expression is defined", true, false, false},
      {"enumerate", "List witnesses of a relation at x", false, true, false},
      {"member", "Semi-decide whether y is a witness at x", true, true, false},
      {"sample", "Draw outcomes of a probabilistic algorithm", false, false, true},
      {"mass", "Certified probability mass of outcome y at x", true, false, false},
      {"freq", "Empirical branch frequencies", false, false, true},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_spec(sub);
    add_refine(sub);
    sub->add_option("--x", cmd.x, "Input point (rational)");
    if (s.y) sub->add_option("--y", cmd.y, "Second point (rational)");
    if (s.max_index) sub->add_option("--max-index", cmd.max_index, "Largest index inspected");
    if (s.sampling) {
      sub->add_option("--seed", cmd.seed, "Sampler seed");
      sub->add_option("--n", cmd.n, "Number of samples");
    }
    sub->callback([&cmd, name = std::string(s.name)] { cmd.name = name; });
  }
  auto* nat = app.add_subcommand("natcheck", "Check the constructions between relation representations over N");
  nat->add_option("--construction", cmd.construction, "roundtrip | dec-to-semi | semi-to-enum");
  nat->add_option("--relation", cmd.relation, "equality | divisibility | geq")->required();
  nat->add_option("--bound", cmd.bound, "Check all x, y <= bound");
  nat->add_option("--fuel", cmd.fuel, "Step budget");
  nat->callback([&cmd] { cmd.name = "natcheck"; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return run_command(cmd, out, err);
}

}  // namespace exactreal::cli
