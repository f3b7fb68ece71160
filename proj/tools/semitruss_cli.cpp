// Command-line front end for the semitruss library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <semitruss/semitruss.hpp>

namespace {

  using namespace semitruss;

  constexpr int exit_pass = 0;
  // A check failed; its witness is in the output.
  constexpr int exit_fail = 1;
  // Bad arguments or input outside the preconditions.
  constexpr int exit_usage = 2;

  int emit(nlohmann::ordered_json const& j, std::string const& output) {
    if (output.empty()) {
      std::cout << j.dump(2) << '\n';
      return exit_pass;
    }
    std::ofstream out(output);
    if (!out) {
      std::cerr << "semitruss: cannot write " << output << '\n';
      return exit_usage;
    }
    out << j.dump(2) << '\n';
    return exit_pass;
  }

  std::string unique_block(SemiTruss const& t) {
    std::string out = "# unique cells (1 = forced):\n";
    for (element a = 0; a < t.size(); ++a) {
      out += "#";
      for (element c = 0; c < t.size(); ++c) {
        out += t.unique_at(a, c) ? " 1" : " 0";
      }
      out += '\n';
    }
    return out;
  }

  SemiTruss load_semitruss(std::string const& path) {
    auto const b = parse_bundle_file(path);
    if (b.lambda) {
      return make_semitruss(b.diamond, b.circ, *b.lambda);
    }
    auto t = derive_semitruss(b.diamond, b.circ);
    if (!t) {
      throw error(errc::not_semitruss, "no lambda satisfies the law");
    }
    return std::move(*t);
  }

  struct Args {
    std::string              bundle;
    std::string              diamond;
    std::string              circ;
    std::string              output;
    element                  e = 0;
    bool                     e_given = false;
    bool                     verify = false;
    std::size_t              n = 0;
    std::vector<std::string> filters;
    bool                     iso         = false;
    bool                     allow_large = false;
    bool                     no_timing   = false;
  };

  element pick_idempotent(SemiTruss const& t, Args const& args) {
    if (args.e_given) {
      return args.e;
    }
    auto const ids = idempotents(t.diamond);
    if (ids.empty()) {
      throw error(errc::not_idempotent, "diamond has no idempotent");
    }
    return ids.front();
  }

  int cmd_check(Args const& args) {
    auto const text   = read_file(args.bundle);
    auto const b      = parse_bundle(text);
    auto       report = check_bundle(b);
    report.subject["file"]   = args.bundle;
    report.subject["digest"] = digest(text);
    if (int rc = emit(to_json(report, !args.no_timing), args.output);
        rc != exit_pass) {
      return rc;
    }
    return report.all_pass() ? exit_pass : exit_fail;
  }

  int cmd_derive_lambda(Args const& args) {
    auto const d = parse_cayley_file(args.diamond);
    auto const c = parse_cayley_file(args.circ);
    auto const t = derive_semitruss(d, c);
    if (!t) {
      std::cerr << "semitruss: no lambda satisfies the law for this pair\n";
      return exit_fail;
    }
    std::cout << "# lambda (smallest candidate per cell)\n"
              << serialize(t->lambda) << unique_block(*t);
    return exit_pass;
  }

  int cmd_semibrace(Args const& args) {
    auto const t      = load_semitruss(args.bundle);
    auto const e      = pick_idempotent(t, args);
    auto const bullet = to_semibrace(t, e);
    auto const s      = sigma_from_idempotent(t, e);
    auto const law    = check_bullet_action_law(t, s, bullet);
    auto const brace  = verify_semibrace(t.diamond, bullet);
    std::cout << "# bullet for e = " << e << '\n' << serialize(bullet);
    std::cout << "# action law: " << (law ? "pass" : "fail") << '\n';
    std::cout << "# semi-brace: "
              << (brace ? std::string("pass")
                        : std::string(to_string(brace.reason)))
              << '\n';
    bool const ok = law.holds
                    && (brace.holds()
                        || brace.reason == semibrace_reason::not_group);
    return ok ? exit_pass : exit_fail;
  }

  int cmd_yb(Args const& args) {
    auto const t = load_semitruss(args.bundle);
    auto const e = pick_idempotent(t, args);
    auto const r = build_yb_from_semitruss(t, e);
    std::cout << serialize(r);
    std::cout << "# bijective: " << (is_bijective(r) ? "yes" : "no") << '\n';
    if (!args.verify) {
      return exit_pass;
    }
    auto const v = verify_ybe(r);
    if (v) {
      std::cout << "# ybe: pass\n";
      return exit_pass;
    }
    std::cout << "# ybe: fail at (" << (*v.witness)[0] << ", "
              << (*v.witness)[1] << ", " << (*v.witness)[2] << ")\n";
    return exit_fail;
  }

  int cmd_census(Args const& args) {
    CensusOptions opts;
    opts.iso                     = args.iso;
    opts.enumeration.allow_large = args.allow_large;
    for (auto const& f : args.filters) {
      if (!opts.filter.set(f)) {
        std::cerr << "semitruss: unknown filter '" << f << "'\n";
        return exit_usage;
      }
    }
    auto const rec = run_census(args.n, opts);
    return emit(to_json(rec, !args.no_timing), args.output);
  }

  int cmd_lemma_tests(Args const& args) {
    EnumerationOptions opts;
    opts.allow_large  = true;
    auto const report = lemma_report(args.n, opts);
    if (int rc = emit(to_json(report, !args.no_timing), args.output);
        rc != exit_pass) {
      return rc;
    }
    return report.all_pass() ? exit_pass : exit_fail;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-truss workbench: Cayley-table checks, constructions "
               "and census"};
  app.require_subcommand(1);
  Args args;

  auto* check = app.add_subcommand(
      "check", "Run every applicable suite on a bundle and print a report");
  check->add_option("bundle", args.bundle, "Bundle file")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("-o,--output", args.output, "Write the report here");
  check->add_flag("--no-timing", args.no_timing, "Omit timing fields");

  auto* derive = app.add_subcommand(
      "derive-lambda", "Print the smallest lambda for a pair of operations");
  derive->add_option("--diamond", args.diamond, "Cayley file for diamond")
      ->required()
      ->check(CLI::ExistingFile);
  derive->add_option("--circ", args.circ, "Cayley file for circ")
      ->required()
      ->check(CLI::ExistingFile);

  auto* brace = app.add_subcommand(
      "semibrace", "Print the bullet operation for a bijective sigma_e");
  brace->add_option("bundle", args.bundle, "Bundle file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* brace_e
      = brace->add_option("--e", args.e, "Idempotent of diamond (default: "
                                         "smallest)");

  auto* yb = app.add_subcommand(
      "yb", "Print the Yang-Baxter map of a semi-truss with circ a group");
  yb->add_option("bundle", args.bundle, "Bundle file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* yb_e = yb->add_option("--e", args.e,
                              "Idempotent of diamond (default: smallest)");
  yb->add_flag("--verify", args.verify, "Check the Yang-Baxter equation");

  auto* census = app.add_subcommand(
      "census", "Count semigroups and semi-truss pairs on n elements");
  census->add_option("--n", args.n, "Carrier size")
      ->required()
      ->check(CLI::Range(1, 4));
  census->add_option("--filter", args.filters,
                     "diamond-left-cancellative | diamond-inverse | "
                     "diamond-group | circ-group (repeatable)");
  census->add_flag("--iso", args.iso, "Also count isomorphism classes");
  census->add_flag("--allow-large", args.allow_large,
                   "Permit n = 4 (requires a diamond filter)");
  census->add_option("-o,--output", args.output, "Write the report here");
  census->add_flag("--no-timing", args.no_timing, "Omit timing fields");

  auto* lemma = app.add_subcommand(
      "lemma-tests",
      "Check the order inequalities in every inverse semigroup up to n");
  lemma->add_option("--n", args.n, "Largest carrier size")
      ->required()
      ->check(CLI::Range(1, 4));
  lemma->add_option("-o,--output", args.output, "Write the report here");
  lemma->add_flag("--no-timing", args.no_timing, "Omit timing fields");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }
  args.e_given = brace_e->count() > 0 || yb_e->count() > 0;

  try {
    if (*check) {
      return cmd_check(args);
    }
    if (*derive) {
      return cmd_derive_lambda(args);
    }
    if (*brace) {
      return cmd_semibrace(args);
    }
    if (*yb) {
      return cmd_yb(args);
    }
    if (*census) {
      return cmd_census(args);
    }
    if (*lemma) {
      return cmd_lemma_tests(args);
    }
  } catch (error const& e) {
    std::cerr << "semitruss: " << e.what() << '\n';
    return e.code() == errc::theorem_violation ? exit_fail : exit_usage;
  }
  return exit_usage;
}
