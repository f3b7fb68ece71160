#ifndef SEMITRUSS_REPORT_HPP_
#define SEMITRUSS_REPORT_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cancellative.hpp"
#include "cayley.hpp"
#include "census.hpp"
#include "error.hpp"
#include "inverse.hpp"
#include "io.hpp"
#include "structure.hpp"
#include "yang_baxter.hpp"

// Structured reports: a list of named checks with verdicts and witnesses,
// serialised as JSON. Check names are stable identifiers; README.md lists
// them with the identity each one tests.

namespace semitruss {

  inline constexpr char const* report_schema_version = "1";

  enum class verdict { pass, fail, not_applicable };

  constexpr std::string_view to_string(verdict v) noexcept {
    switch (v) {
      case verdict::pass: return "pass";
      case verdict::fail: return "fail";
      case verdict::not_applicable: return "not-applicable";
    }
    return "unknown";
  }

  struct Check {
    std::string          name;
    std::string          law;
    verdict              result = verdict::pass;
    std::vector<element> witness;
    // Free-form detail, e.g. the statement breakdown of an implication
    // check or an error message.
    nlohmann::ordered_json   details;
    std::chrono::nanoseconds duration{0};
  };

  struct Report {
    nlohmann::ordered_json subject;
    std::vector<Check>     checks;
    // Informational fields that are not pass/fail checks.
    nlohmann::ordered_json facts = nlohmann::ordered_json::object();

    [[nodiscard]] bool all_pass() const noexcept {
      for (auto const& c : checks) {
        if (c.result == verdict::fail) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] Check const* find(std::string_view name) const noexcept {
      for (auto const& c : checks) {
        if (c.name == name) {
          return &c;
        }
      }
      return nullptr;
    }
  };

  [[nodiscard]] inline nlohmann::ordered_json
  to_json(Report const& r, bool with_timing = true) {
    nlohmann::ordered_json j;
    j["schema_version"] = report_schema_version;
    j["subject"]        = r.subject;
    j["facts"]          = r.facts;
    auto& checks        = j["checks"];
    checks              = nlohmann::ordered_json::array();
    nlohmann::ordered_json timing = nlohmann::ordered_json::object();
    for (auto const& c : r.checks) {
      nlohmann::ordered_json cj;
      cj["name"]    = c.name;
      cj["law"]     = c.law;
      cj["verdict"] = to_string(c.result);
      if (!c.witness.empty()) {
        cj["witness"] = c.witness;
      }
      if (!c.details.is_null()) {
        cj["details"] = c.details;
      }
      checks.push_back(std::move(cj));
      timing[c.name] = std::chrono::duration<double, std::micro>(c.duration)
                           .count();
    }
    j["all_pass"] = r.all_pass();
    if (with_timing) {
      j["timing_us"] = std::move(timing);
    }
    return j;
  }

  namespace detail {
    class CheckRecorder {
     public:
      explicit CheckRecorder(Report& r) : _report(r) {}

      // Runs `f`, which returns a Verdict or an optional<Verdict> (absent
      // meaning not applicable). Errors thrown by `f` become failures with
      // the message recorded in details.
      template <typename F>
      Check& run(std::string name, std::string law, F&& f) {
        Check c;
        c.name         = std::move(name);
        c.law          = std::move(law);
        auto const t0  = std::chrono::steady_clock::now();
        try {
          apply(c, f());
        } catch (error const& e) {
          c.result            = verdict::fail;
          c.details["error"] = e.what();
        }
        c.duration = std::chrono::steady_clock::now() - t0;
        _report.checks.push_back(std::move(c));
        return _report.checks.back();
      }

     private:
      static void apply(Check& c, Verdict const& v) {
        c.result  = v.holds ? verdict::pass : verdict::fail;
        c.witness = v.witness;
      }
      static void apply(Check& c, std::optional<Verdict> const& v) {
        if (!v) {
          c.result = verdict::not_applicable;
        } else {
          apply(c, *v);
        }
      }
      static void apply(Check& c, bool b) {
        c.result = b ? verdict::pass : verdict::fail;
      }

      Report& _report;
    };

    inline std::string tag(char const* base, element e) {
      return std::string(base) + "[e=" + std::to_string(e) + "]";
    }

    inline nlohmann::ordered_json table_json(FiniteBinaryOp const& op) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (element a = 0; a < op.size(); ++a) {
        std::vector<element> row;
        for (element b = 0; b < op.size(); ++b) {
          row.push_back(op(a, b));
        }
        rows.push_back(row);
      }
      return rows;
    }

    inline void add_cancellative_suites(Report& report, SemiTruss const& t) {
      CheckRecorder rec(report);
      auto const    act = check_action_laws(t);
      rec.run("action.composition", "lambda(a circ b, c) = lambda(a, lambda(b, c))",
              [&] { return act.composition; });
      rec.run("action.endomorphism",
              "lambda(a, b diamond c) = lambda(a, b) diamond lambda(a, c)",
              [&] { return act.endomorphism; });
      rec.run("action.left_identity",
              "lambda(n, a) = a for every left identity n of circ",
              [&] { return act.left_identity; });

      auto const eq = check_equivalence_prop(t);
      rec.run("equivalence.quotient_law",
              "a circ (b diamond q(c,d)) = (a circ b) diamond q(a circ c, a "
              "circ d) whenever c precedes d",
              [&] { return eq.quotient_law; });
      for (auto const& f : eq.sigma_forms) {
        rec.run(tag("equivalence.sigma_precedes", f.e),
                "sigma(a) precedes a circ c", [&] { return f.precedes; });
        rec.run(tag("equivalence.sigma_law", f.e),
                "a circ (b diamond c) = (a circ b) diamond q(sigma(a), a circ c)",
                [&] { return f.law; });
        rec.run(tag("equivalence.left_identity_idempotent", f.e),
                "sigma(n) is idempotent for every left identity n of circ",
                [&] { return f.left_identity_image; });
      }

      bool const circ_group = is_group(t.circ);
      for (element e : idempotents(t.diamond)) {
        std::optional<SigmaData> s;
        rec.run(tag("sigma.bijectivity", e),
                "sigma bijective iff circ has a right identity n and u with "
                "u circ e = e circ u = n",
                [&] {
                  s = sigma_from_idempotent(t, e);
                  return Verdict::pass();
                })
            .details["bijective"]
            = s && s->bijective();
        if (!s) {
          continue;
        }
        auto const laws = check_sigma_laws(t, *s);
        rec.run(tag("sigma.equivariance", e), "sigma(a circ b) = a circ sigma(b)",
                [&] { return laws.equivariance; });
        rec.run(tag("sigma.cocycle", e),
                "sigma(a circ b) = sigma(a) diamond (a |> sigma(b))",
                [&] { return laws.cocycle; });
        rec.run(tag("sigma.factorization", e),
                "a circ b = sigma(a) diamond (a |> b)",
                [&] { return laws.factorization; });
        if (!s->bijective()) {
          continue;
        }
        std::optional<FiniteBinaryOp> bullet;
        rec.run(tag("semibrace.action_law", e),
                "a bullet (b diamond c) = (a bullet b) diamond "
                "(sigma^-1(a) |> c)",
                [&] {
                  bullet = to_semibrace(t, e);
                  return check_bullet_action_law(t, *s, *bullet);
                });
        if (!circ_group || !bullet) {
          continue;
        }
        rec.run(tag("semibrace.law", e),
                "a bullet (b diamond c) = (a bullet b) diamond (a bullet "
                "(a^ diamond c))",
                [&] {
                  auto const v = verify_semibrace(t.diamond, *bullet);
                  return v ? Verdict::pass() : Verdict::fail(v.witness);
                });
        std::optional<PairMap> r1;
        rec.run(tag("yang_baxter.equation", e),
                "(r x id)(id x r)(r x id) = (id x r)(r x id)(id x r)", [&] {
                  r1          = build_yb_from_semitruss(t, e);
                  auto const v = verify_ybe(*r1);
                  return v ? Verdict::pass()
                           : Verdict::fail({(*v.witness)[0], (*v.witness)[1],
                                            (*v.witness)[2]});
                });
        rec.run(tag("yang_baxter.constructions_agree", e),
                "semi-truss map equals the semi-brace map of bullet", [&] {
                  auto const r2 = build_yb_from_semibrace(t.diamond, *bullet);
                  for (element a = 0; a < t.size(); ++a) {
                    for (element b = 0; b < t.size(); ++b) {
                      if ((*r1)(a, b) != r2(a, b)) {
                        return Verdict::fail({a, b});
                      }
                    }
                  }
                  return Verdict::pass();
                });
        report.facts[tag("yang_baxter.bijective", e)] = is_bijective(*r1);
      }
    }

    inline void add_inverse_suites(Report& report, SemiTruss const& t) {
      CheckRecorder rec(report);
      auto const    it = make_inverse_semitruss(t);

      auto const p31 = check_prop31_implications(t.diamond, t.circ, it.istr);
      rec.run("inverse.implications",
              "ternary law implies the sigma, lambda, tau and mu laws; sigma "
              "law implies lambda; tau law implies mu",
              [&] { return p31.implications_ok; })
          .details = {{"ternary", p31.s1_ternary},
                      {"sigma_law", p31.s2_sigma},
                      {"lambda_exists", p31.s3_lambda_exists},
                      {"tau_law", p31.s4_tau},
                      {"mu_exists", p31.s5_mu_exists}};

      rec.run("inverse.tau_sigma", "tau(a, b) = sigma(a, b')", [&] {
        for (element a = 0; a < t.size(); ++a) {
          for (element b = 0; b < t.size(); ++b) {
            if (it.tau(a, b) != it.sigma(a, it.istr.inverse(b))) {
              return Verdict::fail({a, b});
            }
          }
        }
        return Verdict::pass();
      });

      static constexpr char const* laws32[] = {
          "sigma(a, e) = a circ e",
          "sigma(a, b diamond b') = sigma(a, b)",
          "a circ b = sigma(a, b) diamond lambda(a, b)",
          "(a circ b) lambda(a, b)' <= sigma(a, b) and sigma(a, b)' (a circ "
          "b) <= lambda(a, b)",
          "range and domain idempotents of a circ b below those of sigma(a, "
          "b) and lambda(a, b)",
          "(a circ b) sigma(a, c)' (a circ c) <= a circ (b diamond c)",
          "(a circ (b diamond c)) (a circ c)' <= (a circ b) sigma(a, b)'",
      };
      auto const p32 = check_prop32(it);
      auto const i32 = p32.items();
      for (std::size_t k = 0; k < i32.size(); ++k) {
        rec.run("inverse.sigma_lambda.item" + std::to_string(k + 1), laws32[k],
                [&] { return *i32[k]; });
      }

      static constexpr char const* laws33[] = {
          "sigma(a, e b) = sigma(a, e) sigma(a, b)' sigma(a, b)",
          "sigma(a, e b) = sigma(a, b) sigma(a, e)' sigma(a, e)",
          "sigma(a, b) sigma(a, c)' = sigma(a, c) sigma(a, b)', idempotent",
          "sigma(a, b) ~l sigma(a, c)",
          "sigma(a, b') (a circ b)' = (a circ b') sigma(a, b)'",
          "(a circ b)' sigma(a, b) = sigma(a, b')' (a circ b')",
          "lambda(a, b') = lambda(a, b)'",
          "lambda(a, e b) = lambda(a, e) lambda(a, b)",
      };
      auto const p33 = check_prop33(it);
      report.facts["inverse.sigma_lambda_hypothesis"] = p33.has_value();
      if (p33) {
        report.facts["inverse.lambda_substituted"] = p33->lambda_substituted;
      }
      for (std::size_t k = 0; k < 8; ++k) {
        rec.run("inverse.sigma_inverse.item" + std::to_string(k + 1),
                laws33[k], [&]() -> std::optional<Verdict> {
                  if (!p33) {
                    return std::nullopt;
                  }
                  return *p33->items()[k];
                });
      }
      rec.run("inverse.lambda_idempotent_endomorphism",
              "lambda(a, -) maps idempotents to idempotents and preserves "
              "their products",
              [&]() -> std::optional<Verdict> {
                if (!p33) {
                  return std::nullopt;
                }
                return lambda_restricts_to_idempotents(it) ? Verdict::pass()
                                                           : Verdict::fail({});
              });
    }
  }  // namespace detail

  //! Runs every applicable suite on a bundle: the semi-truss law always,
  //! the cancellative suites when diamond is left cancellative, and the
  //! inverse-semigroup suites when diamond is an inverse semigroup.
  [[nodiscard]] inline Report check_bundle(Bundle const& b) {
    Report report;
    report.subject = {{"kind", "bundle"}, {"n", b.diamond.size()}};
    detail::CheckRecorder rec(report);

    bool const d_assoc = rec.run("structure.diamond_associative",
                                 "(a diamond b) diamond c = a diamond (b "
                                 "diamond c)",
                                 [&] { return check_associative(b.diamond); })
                             .result
                         == verdict::pass;
    bool const c_assoc = rec.run("structure.circ_associative",
                                 "(a circ b) circ c = a circ (b circ c)",
                                 [&] { return check_associative(b.circ); })
                             .result
                         == verdict::pass;
    if (!d_assoc || !c_assoc) {
      return report;
    }

    auto const sd = structure_report(b.diamond);
    auto const sc = structure_report(b.circ);
    report.facts["diamond.left_cancellative"] = sd.left_cancellative;
    report.facts["diamond.inverse_semigroup"] = sd.is_inverse_semigroup;
    report.facts["diamond.group"]             = sd.is_group;
    report.facts["diamond.idempotents"]       = sd.idempotents;
    report.facts["circ.group"]                = sc.is_group;
    report.facts["circ.left_identities"]      = sc.left_identities;

    std::optional<SemiTruss> t;
    rec.run("semitruss.law", "a circ (b diamond c) = (a circ b) diamond lambda(a, c)",
            [&] {
              if (b.lambda) {
                auto const v
                    = check_semitruss_law(b.diamond, b.circ, *b.lambda);
                if (v) {
                  t = make_semitruss(b.diamond, b.circ, *b.lambda);
                }
                return v;
              }
              t = derive_semitruss(b.diamond, b.circ);
              if (t) {
                return Verdict::pass();
              }
              // Witness (a, c): a cell with no admissible lambda value.
              auto const cands = lambda_candidates(b.diamond, b.circ);
              auto const n     = b.diamond.size();
              for (std::size_t k = 0; k < cands.size(); ++k) {
                if (cands[k].empty()) {
                  return Verdict::fail({static_cast<element>(k / n),
                                        static_cast<element>(k % n)});
                }
              }
              return Verdict::fail({});
            });
    if (!t) {
      return report;
    }
    report.facts["lambda.source"]
        = t->source == lambda_source::supplied ? "supplied" : "derived";
    report.facts["lambda.table"] = detail::table_json(t->lambda);
    report.facts["lambda.all_unique"]
        = std::find(t->lambda_unique.begin(), t->lambda_unique.end(), false)
          == t->lambda_unique.end();

    if (sd.left_cancellative) {
      detail::add_cancellative_suites(report, *t);
    }
    if (sd.is_inverse_semigroup) {
      detail::add_inverse_suites(report, *t);
    }
    return report;
  }

  //! The order inequalities for every product a diamond b = c in every
  //! inverse semigroup on 1..max_n elements.
  [[nodiscard]] inline Report lemma_report(std::size_t               max_n,
                                           EnumerationOptions const& opts) {
    Report report;
    report.subject = {{"kind", "order-lemmas"}, {"max_n", max_n}};
    detail::CheckRecorder rec(report);
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto const sgs = enumerate_semigroups(n, opts);
      std::size_t inverse_count = 0;
      struct Slot {
        char const*           name;
        char const*           law;
        Verdict OrderLemmaReport::*field;
      };
      static constexpr Slot slots[] = {
          {"right_cancel", "c diamond b' <= a", &OrderLemmaReport::right_cancel},
          {"left_cancel", "a' diamond c <= b", &OrderLemmaReport::left_cancel},
          {"range_chain", "b c' <= a', a b c' <= a a', c c' <= a a'",
           &OrderLemmaReport::range_chain},
          {"domain_chain", "c' a <= b', c' a b <= b' b, c' c <= b' b",
           &OrderLemmaReport::domain_chain},
      };
      std::vector<OrderLemmaReport> reports;
      std::vector<FiniteBinaryOp const*> instances;
      for (auto const& op : sgs) {
        if (!inverse_structure(op)) {
          continue;
        }
        ++inverse_count;
        reports.push_back(check_order_lemmas(op));
        instances.push_back(&op);
      }
      for (auto const& slot : slots) {
        auto& c = rec.run(
            std::string("order_lemma.") + slot.name + "[n="
                + std::to_string(n) + "]",
            slot.law, [&] {
              for (std::size_t i = 0; i < reports.size(); ++i) {
                auto const& v = reports[i].*(slot.field);
                if (!v) {
                  return v;
                }
              }
              return Verdict::pass();
            });
        for (std::size_t i = 0; i < reports.size(); ++i) {
          if (!(reports[i].*(slot.field))) {
            c.details["instance"] = to_string(*instances[i]);
            break;
          }
        }
      }
      report.facts["inverse_semigroups[n=" + std::to_string(n) + "]"]
          = inverse_count;
    }
    return report;
  }

  [[nodiscard]] inline nlohmann::ordered_json
  to_json(CensusCounts const& c) {
    return {{"total_tables", c.total_tables},
            {"associative", c.associative},
            {"left_cancellative_semigroups", c.left_cancellative_semigroups},
            {"inverse_semigroups", c.inverse_semigroups},
            {"groups", c.groups},
            {"semitruss_pairs", c.semitruss_pairs},
            {"lambda_unique_pairs", c.lambda_unique_pairs},
            {"group_circ_convertible", c.group_circ_convertible},
            {"ybe_pass", c.ybe_pass}};
  }

  [[nodiscard]] inline nlohmann::ordered_json
  to_json(CensusRecord const& r, bool with_timing = true) {
    nlohmann::ordered_json j;
    j["schema_version"] = report_schema_version;
    j["subject"]        = {{"kind", "census"},
                           {"n", r.n},
                           {"filters", r.filters},
                           {"iso", r.isomorphism_classes.has_value()}};
    j["counts"]         = to_json(r.labeled);
    if (r.isomorphism_classes) {
      auto iso = to_json(*r.isomorphism_classes);
      iso.erase("total_tables");
      j["isomorphism_classes"] = std::move(iso);
    }
    if (with_timing) {
      j["timing_us"] = {
          {"wall_time",
           std::chrono::duration<double, std::micro>(r.wall_time).count()}};
    }
    return j;
  }

}  // namespace semitruss

#endif  // SEMITRUSS_REPORT_HPP_
