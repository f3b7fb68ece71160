// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <semitruss/semitruss.hpp>

#include "oracle.hpp"

using namespace semitruss;

namespace {

  using clock_type = std::chrono::steady_clock;

  struct Outcome {
    bool        ok = true;
    std::string note;
  };

  double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
  }

  std::vector<SemiTruss> population(std::size_t max_n, SemitrussFilter f) {
    std::vector<SemiTruss> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto ts = enumerate_semitrusses(n, f);
      out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
  }

  SemitrussFilter lc_filter() {
    SemitrussFilter f;
    f.diamond_left_cancellative = true;
    return f;
  }

  // Action laws on every left-cancellative instance up to n = 3.
  Outcome action_laws() {
    auto const   t0 = clock_type::now();
    std::size_t  count = 0;
    for (auto const& t : population(3, lc_filter())) {
      ++count;
      if (!check_action_laws(t).all()) {
        return {false, "action law fails on an instance"};
      }
    }
    double const s = seconds_since(t0);
    return {s < 60.0, std::to_string(count) + " instances, "
                          + std::to_string(s) + " s"};
  }

  Outcome equivalence() {
    std::size_t checked = 0;
    for (auto const& t : population(3, lc_filter())) {
      if (idempotents(t.diamond).empty()) {
        continue;
      }
      auto const r = check_equivalence_prop(t);
      if (!r.all() || r.sigma_forms.size() != idempotents(t.diamond).size()) {
        return {false, "equivalent forms disagree"};
      }
      checked += r.sigma_forms.size();
    }
    return {checked > 0, std::to_string(checked) + " (instance, e) choices"};
  }

  Outcome sigma_laws() {
    std::size_t bij = 0, nonbij = 0;
    for (auto const& t : population(3, lc_filter())) {
      for (element e : idempotents(t.diamond)) {
        auto const s    = sigma_from_idempotent(t, e);
        auto const laws = check_sigma_laws(t, s);
        if (!laws.equivariance || !laws.cocycle) {
          return {false, "sigma identity fails"};
        }
        auto const w = invertible_wrt_right_identity(t.circ, e);
        if (s.bijective() != w.has_value()) {
          return {false, "bijectivity characterisation disagrees"};
        }
        if (s.bijective()
            && (*s.right_identity_n != w->right_identity
                || !is_right_identity(t.circ, *s.right_identity_n))) {
          return {false, "right identity mismatch"};
        }
        (s.bijective() ? bij : nonbij) += 1;
      }
    }
    return {bij > 0 && nonbij > 0, std::to_string(bij) + " bijective, "
                                       + std::to_string(nonbij)
                                       + " not bijective"};
  }

  bool group_suite(SemiTruss const& t) {
    for (element e : idempotents(t.diamond)) {
      auto const bullet = to_semibrace(t, e);
      if (!verify_semibrace(t.diamond, bullet)) {
        return false;
      }
      auto const r = build_yb_from_semitruss(t, e);
      if (!verify_ybe(r).holds) {
        return false;
      }
      if (!(build_yb_from_semibrace(t.diamond, bullet) == r)) {
        return false;
      }
    }
    return true;
  }

  Outcome semibrace_and_yang_baxter() {
    SemitrussFilter f = lc_filter();
    f.circ_group      = true;
    std::size_t small = 0;
    for (auto const& t : population(3, f)) {
      ++small;
      if (!group_suite(t)) {
        return {false, "group-circ suite fails for n <= 3"};
      }
    }
    auto const t0 = clock_type::now();
    SemitrussFilter g;
    g.diamond_group = true;
    g.circ_group    = true;
    EnumerationOptions big;
    big.allow_large = true;
    std::size_t large = 0;
    for (auto const& t : enumerate_semitrusses(4, g, big)) {
      ++large;
      if (!group_suite(t)) {
        return {false, "group-circ suite fails for n = 4"};
      }
    }
    double const s = seconds_since(t0);
    return {small > 0 && large > 0 && s < 600.0,
            std::to_string(small) + " instances n <= 3, "
                + std::to_string(large) + " instances n = 4 in "
                + std::to_string(s) + " s"};
  }

  Outcome inverse_suites() {
    SemitrussFilter f;
    f.diamond_inverse   = true;
    std::size_t count   = 0, hypothesis = 0;
    for (auto& t : population(3, f)) {
      auto const it = make_inverse_semitruss(std::move(t));
      if (!check_prop31_implications(it.base.diamond, it.base.circ, it.istr)
               .implications_ok) {
        return {false, "implication structure violated"};
      }
      if (!check_prop32(it).all()) {
        return {false, "sigma-lambda item fails"};
      }
      if (auto const r = check_prop33(it)) {
        ++hypothesis;
        if (!r->all()) {
          return {false, "sigma-inverse item fails"};
        }
      }
      ++count;
    }
    return {count > 0, std::to_string(count) + " instances, "
                           + std::to_string(hypothesis)
                           + " with the hypothesis"};
  }

  Outcome census_reproducible() {
    std::size_t const expected[] = {1, 8, 113};
    for (int n = 1; n <= 3; ++n) {
      auto const got = enumerate_semigroups(n).size();
      if (got != expected[n - 1] || got != oracle::semigroups(n).size()) {
        return {false, "semigroup count mismatch at n = " + std::to_string(n)};
      }
    }
    CensusOptions opts;
    opts.iso     = true;
    auto const a = to_json(run_census(3, opts), false).dump();
    auto const b = to_json(run_census(3, opts), false).dump();
    return {a == b, "counts 1, 8, 113; reports identical"};
  }

  Outcome named_instances() {
    using namespace fixtures;
    auto const swap = PairMap::from_function(
        2, [](element a, element b) { return Pair{b, a}; });
    auto const zt = derive_semitruss(z2(), z2());
    if (!zt || !(build_yb_from_semitruss(*zt, 0) == swap)) {
      return {false, "Z2 truss does not give the swap"};
    }
    Bundle const rp{right_projection(), z2(), z2()};
    if (!check_bundle(rp).all_pass()) {
      return {false, "right projection truss fails a suite"};
    }
    auto const rt = make_semitruss(right_projection(), z2(), z2());
    for (element e : {0u, 1u}) {
      if (!verify_ybe(build_yb_from_semitruss(rt, e)).holds) {
        return {false, "right projection map fails YBE"};
      }
    }
    auto const mt = make_inverse_semitruss(make_semitruss(meet(), meet(), meet()));
    auto const r  = check_prop33(mt);
    if (!r || r->lambda_substituted || !r->all()) {
      return {false, "meet semilattice sigma-inverse items"};
    }
    return {true, "swap, right projection, meet semilattice"};
  }

  Outcome order_lemmas() {
    EnumerationOptions big;
    big.allow_large = true;
    auto const r    = lemma_report(4, big);
    return {r.all_pass() && r.checks.size() == 16,
            std::to_string(r.facts["inverse_semigroups[n=4]"].get<int>())
                + " inverse semigroups at n = 4"};
  }

  Outcome negative_paths() {
    using namespace fixtures;
    try {
      (void)left_quotient(left_zero(), 0, 1);
      return {false, "left zero accepted by left_quotient"};
    } catch (error const& e) {
      if (e.code() != errc::not_left_cancellative) {
        return {false, "wrong error for left_quotient"};
      }
    }
    if (inverse_structure(left_zero())) {
      return {false, "left zero has an inverse structure"};
    }
    struct Case {
      char const* text;
      errc        code;
      std::size_t line, column;
    };
    Case const cases[] = {
        {"2\n0 1\n1 2\n", errc::range_error, 3, 3},
        {"2\n0 1\n1\n", errc::parse_error, 3, 0},
        {"2\n0 1\n", errc::parse_error, 3, 0},
        {"2\n0 q\n1 0\n", errc::parse_error, 2, 3},
    };
    for (auto const& c : cases) {
      try {
        (void)parse_cayley(c.text);
        return {false, "malformed table accepted"};
      } catch (parse_error const& e) {
        if (e.code() != c.code || e.line() != c.line
            || e.column() != c.column) {
          return {false, std::string("wrong position for ") + e.what()};
        }
      }
    }
    return {true, "left_quotient, inverse structure, parser"};
  }

}  // namespace

int main() {
  std::pair<char const*, std::function<Outcome()>> const criteria[] = {
      {"action laws on left-cancellative semi-trusses, n <= 3", action_laws},
      {"equivalent forms for every idempotent, n <= 3", equivalence},
      {"sigma identities and bijectivity characterisation, n <= 3",
       sigma_laws},
      {"semi-brace and Yang-Baxter suite, n <= 3 and group diamond n = 4",
       semibrace_and_yang_baxter},
      {"inverse-semigroup suites, n <= 3", inverse_suites},
      {"census reproducibility", census_reproducible},
      {"named instances", named_instances},
      {"order inequalities, n <= 4", order_lemmas},
      {"negative paths", negative_paths},
  };
  int failed = 0;
  int index  = 1;
  for (auto const& [name, run] : criteria) {
    Outcome out;
    try {
      out = run();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s (%s)\n", out.ok ? "PASS" : "FAIL", index,
                name, out.note.c_str());
    failed += out.ok ? 0 : 1;
    ++index;
  }
  return failed == 0 ? 0 : 1;
}
