#ifndef SEMITRUSS_CANCELLATIVE_HPP_
#define SEMITRUSS_CANCELLATIVE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "structure.hpp"

// Left semi-trusses (A, diamond, circ, lambda) with
//
//   a circ (b diamond c) = (a circ b) diamond lambda(a, c),
//
// together with the theory available when (A, diamond) is left
// cancellative: the action laws, the maps sigma_e(a) = a circ e, and the
// conversion to a semi-brace.

namespace semitruss {

  enum class lambda_source { derived, supplied };

  struct SemiTruss {
    FiniteBinaryOp    diamond;
    FiniteBinaryOp    circ;
    FiniteBinaryOp    lambda;
    std::vector<bool> lambda_unique;
    lambda_source     source = lambda_source::derived;

    [[nodiscard]] std::size_t size() const noexcept {
      return diamond.size();
    }

    //! The action a |> b := lambda(a, b).
    [[nodiscard]] element act(element a, element b) const noexcept {
      return lambda(a, b);
    }

    [[nodiscard]] bool unique_at(element a, element c) const noexcept {
      return lambda_unique[a * size() + c];
    }
  };

  namespace detail {
    inline void require_associative(FiniteBinaryOp const& op,
                                    char const*           name) {
      if (!is_associative(op)) {
        throw error(errc::not_associative, std::string(name)
                                               + " is not associative");
      }
    }

    inline void require_pair(FiniteBinaryOp const& diamond,
                             FiniteBinaryOp const& circ) {
      check_same_size(diamond, circ);
      require_associative(diamond, "diamond");
      require_associative(circ, "circ");
    }

    inline void require_left_cancellative(FiniteBinaryOp const& op) {
      if (!is_left_cancellative(op)) {
        throw error(errc::not_left_cancellative,
                    "diamond is not left cancellative");
      }
    }

    inline void require_idempotent(FiniteBinaryOp const& op, element e) {
      check_element(op, e, "e");
      if (!is_idempotent(op, e)) {
        throw error(errc::not_idempotent,
                    std::to_string(e) + " is not an idempotent of diamond");
      }
    }

    inline std::string dump(SemiTruss const& t) {
      return "diamond:\n" + to_string(t.diamond) + "circ:\n"
             + to_string(t.circ) + "lambda:\n" + to_string(t.lambda);
    }

    [[noreturn]] inline void theorem_violation(std::string const& what,
                                               SemiTruss const&   t) {
      throw error(errc::theorem_violation, what + "\n" + dump(t));
    }
  }  // namespace detail

  //! Exhaustive check of the semi-truss law over all triples (a, b, c).
  //! The witness of a failure is (a, b, c).
  [[nodiscard]] inline Verdict
  check_semitruss_law(FiniteBinaryOp const& diamond,
                      FiniteBinaryOp const& circ,
                      FiniteBinaryOp const& lambda) {
    detail::require_pair(diamond, circ);
    detail::check_same_size(diamond, lambda);
    auto const n = static_cast<element>(diamond.size());
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        element const ab = circ(a, b);
        for (element c = 0; c < n; ++c) {
          if (circ(a, diamond(b, c)) != diamond(ab, lambda(a, c))) {
            return Verdict::fail({a, b, c});
          }
        }
      }
    }
    return Verdict::pass();
  }

  [[nodiscard]] inline bool verify_semitruss(FiniteBinaryOp const& diamond,
                                             FiniteBinaryOp const& circ,
                                             FiniteBinaryOp const& lambda) {
    return check_semitruss_law(diamond, circ, lambda).holds;
  }

  //! For each cell (a, c), the ascending list of x such that
  //! a circ (b diamond c) = (a circ b) diamond x for every b. Cell (a, c)
  //! lives at index a * n + c.
  [[nodiscard]] inline std::vector<std::vector<element>>
  lambda_candidates(FiniteBinaryOp const& diamond,
                    FiniteBinaryOp const& circ) {
    detail::require_pair(diamond, circ);
    auto const                        n = static_cast<element>(diamond.size());
    std::vector<std::vector<element>> result(n * n);
    for (element a = 0; a < n; ++a) {
      for (element c = 0; c < n; ++c) {
        for (element x = 0; x < n; ++x) {
          bool ok = true;
          for (element b = 0; b < n && ok; ++b) {
            ok = circ(a, diamond(b, c)) == diamond(circ(a, b), x);
          }
          if (ok) {
            result[a * n + c].push_back(x);
          }
        }
      }
    }
    return result;
  }

  struct DerivedLambda {
    FiniteBinaryOp    lambda;
    std::vector<bool> unique;

    [[nodiscard]] bool all_unique() const noexcept {
      return std::find(unique.begin(), unique.end(), false) == unique.end();
    }
  };

  //! The smallest valid lambda, cell by cell, with a flag per cell marking
  //! whether the value was forced. Returns nullopt if some cell admits no
  //! value, i.e. the pair is not a semi-truss for any lambda.
  [[nodiscard]] inline std::optional<DerivedLambda>
  derive_lambda(FiniteBinaryOp const& diamond, FiniteBinaryOp const& circ) {
    auto const           cands = lambda_candidates(diamond, circ);
    auto const           n     = diamond.size();
    std::vector<element> table(n * n);
    std::vector<bool>    unique(n * n);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (cands[i].empty()) {
        return std::nullopt;
      }
      table[i]  = cands[i].front();
      unique[i] = cands[i].size() == 1;
    }
    return DerivedLambda{FiniteBinaryOp(n, std::move(table)),
                         std::move(unique)};
  }

  [[nodiscard]] inline std::optional<SemiTruss>
  derive_semitruss(FiniteBinaryOp const& diamond, FiniteBinaryOp const& circ) {
    auto derived = derive_lambda(diamond, circ);
    if (!derived) {
      return std::nullopt;
    }
    return SemiTruss{diamond, circ, std::move(derived->lambda),
                     std::move(derived->unique), lambda_source::derived};
  }

  //! Wraps a supplied lambda. Throws errc::not_semitruss if the law fails.
  [[nodiscard]] inline SemiTruss make_semitruss(FiniteBinaryOp diamond,
                                                FiniteBinaryOp circ,
                                                FiniteBinaryOp lambda) {
    auto const v = check_semitruss_law(diamond, circ, lambda);
    if (!v) {
      throw error(errc::not_semitruss,
                  "law fails at (a, b, c) = (" + std::to_string(v.witness[0])
                      + ", " + std::to_string(v.witness[1]) + ", "
                      + std::to_string(v.witness[2]) + ")");
    }
    auto const        cands = lambda_candidates(diamond, circ);
    std::vector<bool> unique(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
      unique[i] = cands[i].size() == 1;
    }
    return SemiTruss{std::move(diamond), std::move(circ), std::move(lambda),
                     std::move(unique), lambda_source::supplied};
  }

  ////////////////////////////////////////////////////////////////////////
  // Action laws
  ////////////////////////////////////////////////////////////////////////

  struct ActionLawsReport {
    // lambda(a circ b, c) = lambda(a, lambda(b, c)); witness (a, b, c).
    Verdict composition;
    // lambda(a, b diamond c) = lambda(a, b) diamond lambda(a, c).
    Verdict endomorphism;
    // lambda(n, a) = a for every left identity n of circ; witness (n, a).
    // Absent when circ has no left identity.
    std::optional<Verdict> left_identity;

    [[nodiscard]] bool all() const noexcept {
      return composition.holds && endomorphism.holds
             && (!left_identity || left_identity->holds);
    }
  };

  [[nodiscard]] inline ActionLawsReport
  check_action_laws(SemiTruss const& t) {
    auto const       n = static_cast<element>(t.size());
    ActionLawsReport r;
    for (element a = 0; a < n && r.composition; ++a) {
      for (element b = 0; b < n && r.composition; ++b) {
        for (element c = 0; c < n; ++c) {
          if (t.act(t.circ(a, b), c) != t.act(a, t.act(b, c))) {
            r.composition = Verdict::fail({a, b, c});
            break;
          }
        }
      }
    }
    for (element a = 0; a < n && r.endomorphism; ++a) {
      for (element b = 0; b < n && r.endomorphism; ++b) {
        for (element c = 0; c < n; ++c) {
          if (t.act(a, t.diamond(b, c))
              != t.diamond(t.act(a, b), t.act(a, c))) {
            r.endomorphism = Verdict::fail({a, b, c});
            break;
          }
        }
      }
    }
    auto const lids = left_identities(t.circ);
    if (!lids.empty()) {
      r.left_identity = Verdict::pass();
      for (element id : lids) {
        for (element a = 0; a < n && r.left_identity->holds; ++a) {
          if (t.act(id, a) != a) {
            r.left_identity = Verdict::fail({id, a});
          }
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // sigma_e(a) = a circ e
  ////////////////////////////////////////////////////////////////////////

  struct SigmaData {
    element                             e = 0;
    std::vector<element>                sigma;
    std::optional<std::vector<element>> sigma_inverse;
    // n = sigma^{-1}(e), a right identity of circ; present iff bijective.
    std::optional<element> right_identity_n;
    // u = sigma^{-1}(n), the inverse of e relative to n.
    std::optional<element> e_inverse_u;

    [[nodiscard]] bool bijective() const noexcept {
      return sigma_inverse.has_value();
    }
  };

  struct RightIdentityWitness {
    element right_identity;
    element inverse_of_e;
  };

  //! Searches for a right identity n of circ and u with
  //! u circ e = e circ u = n. Independent of sigma; used to cross-check
  //! sigma's bijectivity.
  [[nodiscard]] inline std::optional<RightIdentityWitness>
  invertible_wrt_right_identity(FiniteBinaryOp const& circ, element e) {
    for (element id : right_identities(circ)) {
      for (element u = 0; u < circ.size(); ++u) {
        if (circ(u, e) == id && circ(e, u) == id) {
          return RightIdentityWitness{id, u};
        }
      }
    }
    return std::nullopt;
  }

  //! Builds sigma_e. When sigma is a bijection, also computes
  //! n = sigma^{-1}(e) and u = sigma^{-1}(n), and confirms that n is a right
  //! identity of circ with u circ e = e circ u = n and sigma^{-1}(a) =
  //! a circ u. When sigma is not a bijection, confirms that no right
  //! identity makes e invertible. Either contradiction throws
  //! errc::theorem_violation.
  [[nodiscard]] inline SigmaData sigma_from_idempotent(SemiTruss const& t,
                                                       element          e) {
    detail::require_idempotent(t.diamond, e);
    auto const n = static_cast<element>(t.size());

    SigmaData s;
    s.e = e;
    s.sigma.resize(n);
    for (element a = 0; a < n; ++a) {
      s.sigma[a] = t.circ(a, e);
    }

    std::vector<element> inverse(n, n);
    bool                 bijective = true;
    for (element a = 0; a < n && bijective; ++a) {
      bijective = inverse[s.sigma[a]] == n;
      inverse[s.sigma[a]] = a;
    }

    auto const witness = invertible_wrt_right_identity(t.circ, e);
    if (!bijective) {
      if (witness) {
        detail::theorem_violation(
            "sigma_" + std::to_string(e)
                + " is not bijective although e is invertible relative to "
                  "the right identity "
                + std::to_string(witness->right_identity),
            t);
      }
      return s;
    }

    element const rid = inverse[e];
    element const u   = inverse[rid];
    bool          ok  = is_right_identity(t.circ, rid)
             && t.circ(u, e) == rid && t.circ(e, u) == rid;
    for (element a = 0; a < n && ok; ++a) {
      ok = inverse[a] == t.circ(a, u);
    }
    if (!ok || !witness) {
      detail::theorem_violation("sigma_" + std::to_string(e)
                                    + " is bijective but n = "
                                    + std::to_string(rid) + ", u = "
                                    + std::to_string(u)
                                    + " do not satisfy the right-identity "
                                      "characterization",
                                t);
    }
    s.sigma_inverse    = std::move(inverse);
    s.right_identity_n = rid;
    s.e_inverse_u      = u;
    return s;
  }

  struct SigmaLawsReport {
    // sigma(a circ b) = a circ sigma(b); witness (a, b).
    Verdict equivariance;
    // sigma(a circ b) = sigma(a) diamond (a |> sigma(b)).
    Verdict cocycle;
    // a circ b = sigma(a) diamond (a |> b).
    Verdict factorization;

    [[nodiscard]] bool all() const noexcept {
      return equivariance.holds && cocycle.holds && factorization.holds;
    }
  };

  [[nodiscard]] inline SigmaLawsReport check_sigma_laws(SemiTruss const& t,
                                                        SigmaData const& s) {
    auto const      n     = static_cast<element>(t.size());
    auto const&     sigma = s.sigma;
    SigmaLawsReport r;
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        element const ab = t.circ(a, b);
        if (r.equivariance && sigma[ab] != t.circ(a, sigma[b])) {
          r.equivariance = Verdict::fail({a, b});
        }
        if (r.cocycle
            && sigma[ab] != t.diamond(sigma[a], t.act(a, sigma[b]))) {
          r.cocycle = Verdict::fail({a, b});
        }
        if (r.factorization && ab != t.diamond(sigma[a], t.act(a, b))) {
          r.factorization = Verdict::fail({a, b});
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalent forms of the distributive law for left-cancellative diamond
  ////////////////////////////////////////////////////////////////////////

  struct SigmaFormReport {
    element e = 0;
    // sigma_e(a) precedes a circ c for all a, c; witness (a, c).
    Verdict precedes;
    // a circ (b diamond c) = (a circ b) diamond q(sigma_e(a), a circ c),
    // where q is the left quotient; witness (a, b, c).
    Verdict law;
    // sigma_e(n) is idempotent for every left identity n of circ; witness
    // (n). Absent when circ has no left identity.
    std::optional<Verdict> left_identity_image;

    [[nodiscard]] bool all() const noexcept {
      return precedes.holds && law.holds
             && (!left_identity_image || left_identity_image->holds);
    }
  };

  struct EquivalenceReport {
    // The semi-truss law itself.
    Verdict semitruss_law;
    // For c preceding d:
    //   a circ (b diamond q(c, d)) = (a circ b) diamond q(a circ c, a circ d)
    // with both quotients defined; witness (a, b, c, d).
    Verdict quotient_law;
    // One entry per idempotent of diamond, ascending.
    std::vector<SigmaFormReport> sigma_forms;

    [[nodiscard]] bool all() const noexcept {
      if (!semitruss_law || !quotient_law) {
        return false;
      }
      for (auto const& f : sigma_forms) {
        if (!f.all()) {
          return false;
        }
      }
      return true;
    }
  };

  //! Throws errc::not_left_cancellative unless diamond is left cancellative.
  [[nodiscard]] inline EquivalenceReport
  check_equivalence_prop(SemiTruss const& t) {
    detail::require_left_cancellative(t.diamond);
    auto const        n = static_cast<element>(t.size());
    auto const&       d = t.diamond;
    auto const&       o = t.circ;
    EquivalenceReport r;
    r.semitruss_law = check_semitruss_law(d, o, t.lambda);

    for (element c = 0; c < n && r.quotient_law; ++c) {
      for (element dd = 0; dd < n && r.quotient_law; ++dd) {
        auto const q = detail::left_quotient_unchecked(d, c, dd);
        if (!q) {
          continue;
        }
        for (element a = 0; a < n && r.quotient_law; ++a) {
          auto const rhs_q
              = detail::left_quotient_unchecked(d, o(a, c), o(a, dd));
          for (element b = 0; b < n; ++b) {
            if (!rhs_q || o(a, d(b, *q)) != d(o(a, b), *rhs_q)) {
              r.quotient_law = Verdict::fail({a, b, c, dd});
              break;
            }
          }
        }
      }
    }

    auto const lids = left_identities(o);
    for (element e : idempotents(d)) {
      SigmaFormReport f;
      f.e = e;
      for (element a = 0; a < n; ++a) {
        element const sa = o(a, e);
        for (element c = 0; c < n; ++c) {
          element const ac = o(a, c);
          if (f.precedes && !precedes(d, sa, ac)) {
            f.precedes = Verdict::fail({a, c});
          }
          auto const q = detail::left_quotient_unchecked(d, sa, ac);
          for (element b = 0; b < n && f.law; ++b) {
            if (!q || o(a, d(b, c)) != d(o(a, b), *q)) {
              f.law = Verdict::fail({a, b, c});
            }
          }
        }
      }
      if (!lids.empty()) {
        f.left_identity_image = Verdict::pass();
        for (element id : lids) {
          if (!is_idempotent(d, o(id, e))) {
            f.left_identity_image = Verdict::fail({id});
            break;
          }
        }
      }
      r.sigma_forms.push_back(std::move(f));
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semi-braces
  ////////////////////////////////////////////////////////////////////////

  //! bullet(a, b) = sigma(sigma^{-1}(a) circ sigma^{-1}(b)) for the
  //! bijective sigma_e. When circ is a group, also confirms
  //! bullet(a, b) = a circ e^{-1} circ b.
  //!
  //! Throws errc::not_idempotent, errc::sigma_not_bijective.
  [[nodiscard]] inline FiniteBinaryOp to_semibrace(SemiTruss const& t,
                                                   element          e) {
    auto const s = sigma_from_idempotent(t, e);
    if (!s.bijective()) {
      throw error(errc::sigma_not_bijective,
                  "sigma_" + std::to_string(e) + " is not a bijection");
    }
    auto const& sinv   = *s.sigma_inverse;
    auto const  bullet = FiniteBinaryOp::from_function(
        t.size(), [&](element a, element b) {
          return s.sigma[t.circ(sinv[a], sinv[b])];
        });
    if (auto const ginv = group_inverse(t.circ)) {
      element const einv = (*ginv)[e];
      for (element a = 0; a < t.size(); ++a) {
        for (element b = 0; b < t.size(); ++b) {
          if (bullet(a, b) != t.circ(t.circ(a, einv), b)) {
            detail::theorem_violation(
                "bullet disagrees with a circ e^-1 circ b at ("
                    + std::to_string(a) + ", " + std::to_string(b) + ")",
                t);
          }
        }
      }
    }
    return bullet;
  }

  //! a bullet (b diamond c) = (a bullet b) diamond (sigma^{-1}(a) |> c),
  //! the form of the semi-brace law that needs only a bijective sigma;
  //! witness (a, b, c).
  [[nodiscard]] inline Verdict check_bullet_action_law(
      SemiTruss const& t, SigmaData const& s, FiniteBinaryOp const& bullet) {
    if (!s.bijective()) {
      throw error(errc::sigma_not_bijective,
                  "sigma_" + std::to_string(s.e) + " is not a bijection");
    }
    auto const  n    = static_cast<element>(t.size());
    auto const& sinv = *s.sigma_inverse;
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        for (element c = 0; c < n; ++c) {
          if (bullet(a, t.diamond(b, c))
              != t.diamond(bullet(a, b), t.act(sinv[a], c))) {
            return Verdict::fail({a, b, c});
          }
        }
      }
    }
    return Verdict::pass();
  }

  enum class semibrace_reason { none, not_cancellative, not_group, law_fails };

  constexpr std::string_view to_string(semibrace_reason r) noexcept {
    switch (r) {
      case semibrace_reason::none: return "None";
      case semibrace_reason::not_cancellative: return "NotCancellative";
      case semibrace_reason::not_group: return "NotGroup";
      case semibrace_reason::law_fails: return "LawFails";
    }
    return "Unknown";
  }

  struct SemibraceVerdict {
    semibrace_reason reason = semibrace_reason::none;
    // (a, b, c) when reason is law_fails.
    std::vector<element> witness;

    [[nodiscard]] bool holds() const noexcept {
      return reason == semibrace_reason::none;
    }
    explicit operator bool() const noexcept {
      return holds();
    }
  };

  //! Checks that diamond is a left-cancellative semigroup, bullet is a
  //! group, and a bullet (b diamond c) = (a bullet b) diamond
  //! (a bullet (a^-1 diamond c)) for all triples.
  [[nodiscard]] inline SemibraceVerdict
  verify_semibrace(FiniteBinaryOp const& diamond,
                   FiniteBinaryOp const& bullet) {
    detail::check_same_size(diamond, bullet);
    if (!is_associative(diamond) || !is_left_cancellative(diamond)) {
      return {semibrace_reason::not_cancellative, {}};
    }
    auto const inv = group_inverse(bullet);
    if (!inv) {
      return {semibrace_reason::not_group, {}};
    }
    auto const n = static_cast<element>(diamond.size());
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        for (element c = 0; c < n; ++c) {
          element const lhs = bullet(a, diamond(b, c));
          element const rhs = diamond(bullet(a, b),
                                      bullet(a, diamond((*inv)[a], c)));
          if (lhs != rhs) {
            return {semibrace_reason::law_fails, {a, b, c}};
          }
        }
      }
    }
    return {};
  }

}  // namespace semitruss

#endif  // SEMITRUSS_CANCELLATIVE_HPP_
