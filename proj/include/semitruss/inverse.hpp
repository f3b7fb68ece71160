#ifndef SEMITRUSS_INVERSE_HPP_
#define SEMITRUSS_INVERSE_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cancellative.hpp"
#include "cayley.hpp"
#include "error.hpp"
#include "structure.hpp"

// Semi-trusses whose diamond is an inverse semigroup. Throughout, x' is the
// diamond-inverse of x and <= the natural partial order. The two-variable
// maps are
//
//   sigma(a, c) = a circ (c diamond c'),    tau(a, b) = a circ (b' diamond b).

namespace semitruss {

  struct InverseSemiTruss {
    SemiTruss            base;
    InverseStructure     istr;
    std::vector<element> sigma2;
    std::vector<element> tau2;

    [[nodiscard]] std::size_t size() const noexcept {
      return base.size();
    }
    [[nodiscard]] element sigma(element a, element c) const noexcept {
      return sigma2[a * size() + c];
    }
    [[nodiscard]] element tau(element a, element b) const noexcept {
      return tau2[a * size() + b];
    }
    //! mu(a, b) = (a circ b) diamond tau(a, b)'.
    [[nodiscard]] element mu(element a, element b) const noexcept {
      return base.diamond(base.circ(a, b), istr.inverse(tau(a, b)));
    }
  };

  namespace detail {
    inline InverseStructure require_inverse(FiniteBinaryOp const& diamond) {
      if (!is_associative(diamond)) {
        throw error(errc::not_inverse_semigroup,
                    "diamond is not associative");
      }
      auto istr = inverse_structure(diamond);
      if (!istr) {
        throw error(errc::not_inverse_semigroup,
                    "some element of diamond lacks a unique inverse");
      }
      return std::move(*istr);
    }

    inline void require_compatible(FiniteBinaryOp const&   diamond,
                                   InverseStructure const& istr) {
      if (istr.size() != diamond.size()) {
        throw error(errc::size_mismatch, "inverse structure size");
      }
    }
  }  // namespace detail

  //! Throws errc::not_inverse_semigroup.
  [[nodiscard]] inline InverseSemiTruss
  make_inverse_semitruss(SemiTruss t) {
    auto       istr = detail::require_inverse(t.diamond);
    auto const n    = static_cast<element>(t.size());
    std::vector<element> sigma2(n * n), tau2(n * n);
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        sigma2[a * n + b]
            = t.circ(a, t.diamond(b, istr.inverse(b)));
        tau2[a * n + b] = t.circ(a, t.diamond(istr.inverse(b), b));
      }
    }
    return {std::move(t), std::move(istr), std::move(sigma2),
            std::move(tau2)};
  }

  //! a circ (b diamond c' diamond d)
  //!     = (a circ b) diamond (a circ c)' diamond (a circ d)
  //! over all quadruples; witness (a, b, c, d).
  [[nodiscard]] inline Verdict
  check_ternary_law(FiniteBinaryOp const& diamond, FiniteBinaryOp const& circ,
                    InverseStructure const& istr) {
    detail::require_pair(diamond, circ);
    detail::require_compatible(diamond, istr);
    auto const n = static_cast<element>(diamond.size());
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        for (element c = 0; c < n; ++c) {
          element const bc = diamond(b, istr.inverse(c));
          element const ab_ac
              = diamond(circ(a, b), istr.inverse(circ(a, c)));
          for (element d = 0; d < n; ++d) {
            if (circ(a, diamond(bc, d)) != diamond(ab_ac, circ(a, d))) {
              return Verdict::fail({a, b, c, d});
            }
          }
        }
      }
    }
    return Verdict::pass();
  }

  //! For each cell (a, b), the ascending list of x such that
  //! a circ (b diamond c) = x diamond (a circ c) for every c.
  [[nodiscard]] inline std::vector<std::vector<element>>
  mu_candidates(FiniteBinaryOp const& diamond, FiniteBinaryOp const& circ) {
    detail::require_pair(diamond, circ);
    auto const                        n = static_cast<element>(diamond.size());
    std::vector<std::vector<element>> result(n * n);
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        for (element x = 0; x < n; ++x) {
          bool ok = true;
          for (element c = 0; c < n && ok; ++c) {
            ok = circ(a, diamond(b, c)) == diamond(x, circ(a, c));
          }
          if (ok) {
            result[a * n + b].push_back(x);
          }
        }
      }
    }
    return result;
  }

  struct TernaryImplicationsReport {
    bool s1_ternary = false;
    // a circ (b diamond c) = (a circ b) diamond sigma(a, c)' diamond (a circ c)
    bool s2_sigma = false;
    bool s3_lambda_exists = false;
    // a circ (b diamond c) = (a circ b) diamond tau(a, b)' diamond (a circ c)
    bool s4_tau = false;
    bool s5_mu_exists = false;
    bool implications_ok = false;

    [[nodiscard]] bool all() const noexcept {
      return s1_ternary && s2_sigma && s3_lambda_exists && s4_tau
             && s5_mu_exists;
    }
  };

  [[nodiscard]] inline TernaryImplicationsReport
  check_prop31_implications(FiniteBinaryOp const&   diamond,
                            FiniteBinaryOp const&   circ,
                            InverseStructure const& istr) {
    TernaryImplicationsReport r;
    r.s1_ternary = check_ternary_law(diamond, circ, istr).holds;

    auto const n = static_cast<element>(diamond.size());
    auto const inv = [&](element x) { return istr.inverse(x); };
    r.s2_sigma     = true;
    r.s4_tau       = true;
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        element const ab  = circ(a, b);
        element const tau = circ(a, diamond(inv(b), b));
        for (element c = 0; c < n; ++c) {
          element const lhs   = circ(a, diamond(b, c));
          element const ac    = circ(a, c);
          element const sigma = circ(a, diamond(c, inv(c)));
          if (r.s2_sigma && lhs != diamond(diamond(ab, inv(sigma)), ac)) {
            r.s2_sigma = false;
          }
          if (r.s4_tau && lhs != diamond(diamond(ab, inv(tau)), ac)) {
            r.s4_tau = false;
          }
        }
      }
    }
    r.s3_lambda_exists = derive_lambda(diamond, circ).has_value();
    r.s5_mu_exists     = true;
    for (auto const& cell : mu_candidates(diamond, circ)) {
      if (cell.empty()) {
        r.s5_mu_exists = false;
        break;
      }
    }
    bool const a_ok = !r.s1_ternary
                      || (r.s2_sigma && r.s3_lambda_exists && r.s4_tau
                          && r.s5_mu_exists);
    bool const b_ok = !r.s2_sigma || r.s3_lambda_exists;
    bool const c_ok = !r.s4_tau || r.s5_mu_exists;
    r.implications_ok = a_ok && b_ok && c_ok;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Properties of sigma and lambda with no extra hypotheses
  ////////////////////////////////////////////////////////////////////////

  struct SigmaLambdaReport {
    // sigma(a, e) = a circ e for idempotent e; witness (a, e).
    Verdict item1;
    // sigma(a, b diamond b') = sigma(a, b); witness (a, b).
    Verdict item2;
    // a circ b = sigma(a, b) diamond lambda(a, b).
    Verdict item3;
    // (a circ b) diamond lambda(a, b)' <= sigma(a, b) and
    // sigma(a, b)' diamond (a circ b) <= lambda(a, b).
    Verdict item4;
    // (a circ b) diamond (a circ b)' <= sigma(a, b) diamond sigma(a, b)' and
    // (a circ b)' diamond (a circ b) <= lambda(a, b)' diamond lambda(a, b).
    Verdict item5;
    // (a circ b) diamond sigma(a, c)' diamond (a circ c)
    //     <= a circ (b diamond c); witness (a, b, c).
    Verdict item6;
    // (a circ (b diamond c)) diamond (a circ c)'
    //     <= (a circ b) diamond sigma(a, b)'.
    Verdict item7;

    [[nodiscard]] std::array<Verdict const*, 7> items() const noexcept {
      return {&item1, &item2, &item3, &item4, &item5, &item6, &item7};
    }

    [[nodiscard]] bool all() const noexcept {
      for (auto const* v : items()) {
        if (!v->holds) {
          return false;
        }
      }
      return true;
    }
  };

  [[nodiscard]] inline SigmaLambdaReport
  check_prop32(InverseSemiTruss const& t) {
    auto const  n   = static_cast<element>(t.size());
    auto const& d   = t.base.diamond;
    auto const& o   = t.base.circ;
    auto const& lam = t.base.lambda;
    auto const& is  = t.istr;
    auto const  inv = [&](element x) { return is.inverse(x); };

    SigmaLambdaReport r;
    for (element a = 0; a < n; ++a) {
      for (element e : is.idempotent_set) {
        if (r.item1 && t.sigma(a, e) != o(a, e)) {
          r.item1 = Verdict::fail({a, e});
        }
      }
      for (element b = 0; b < n; ++b) {
        element const ab  = o(a, b);
        element const sab = t.sigma(a, b);
        element const lab = lam(a, b);
        if (r.item2 && t.sigma(a, d(b, inv(b))) != sab) {
          r.item2 = Verdict::fail({a, b});
        }
        if (r.item3 && ab != d(sab, lab)) {
          r.item3 = Verdict::fail({a, b});
        }
        if (r.item4
            && !(is.le(d(ab, inv(lab)), sab) && is.le(d(inv(sab), ab), lab))) {
          r.item4 = Verdict::fail({a, b});
        }
        if (r.item5
            && !(is.le(d(ab, inv(ab)), d(sab, inv(sab)))
                 && is.le(d(inv(ab), ab), d(inv(lab), lab)))) {
          r.item5 = Verdict::fail({a, b});
        }
        for (element c = 0; c < n; ++c) {
          element const a_bc = o(a, d(b, c));
          element const ac   = o(a, c);
          if (r.item6
              && !is.le(d(d(ab, inv(t.sigma(a, c))), ac), a_bc)) {
            r.item6 = Verdict::fail({a, b, c});
          }
          if (r.item7 && !is.le(d(a_bc, inv(ac)), d(ab, inv(sab)))) {
            r.item7 = Verdict::fail({a, b, c});
          }
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Properties under lambda(a, b) = sigma(a, b)' diamond (a circ b)
  ////////////////////////////////////////////////////////////////////////

  //! The table (a, b) -> sigma(a, b)' diamond (a circ b).
  [[nodiscard]] inline FiniteBinaryOp
  sigma_lambda(InverseSemiTruss const& t) {
    return FiniteBinaryOp::from_function(
        t.size(), [&](element a, element b) {
          return t.base.diamond(t.istr.inverse(t.sigma(a, b)),
                                t.base.circ(a, b));
        });
  }

  //! Returns the semi-truss with lambda replaced by sigma(a, b)' diamond
  //! (a circ b) when that table is itself a valid lambda, so that the
  //! hypothesis is decided for the pair rather than for one lambda choice.
  //! Returns nullopt when no valid lambda has that form.
  [[nodiscard]] inline std::optional<InverseSemiTruss>
  with_sigma_lambda(InverseSemiTruss const& t) {
    auto const hyp = sigma_lambda(t);
    if (hyp == t.base.lambda) {
      return t;
    }
    if (!verify_semitruss(t.base.diamond, t.base.circ, hyp)) {
      return std::nullopt;
    }
    InverseSemiTruss result = t;
    result.base.lambda      = hyp;
    result.base.source      = lambda_source::derived;
    return result;
  }

  struct SigmaInverseReport {
    // Set when the semi-truss's own lambda differs from the hypothesis
    // table and the latter was used instead.
    bool lambda_substituted = false;
    // sigma(a, e diamond b) = sigma(a, e) diamond sigma(a, b)' diamond
    // sigma(a, b); witness (a, e, b).
    Verdict item1;
    // sigma(a, e diamond b) = sigma(a, b) diamond sigma(a, e)' diamond
    // sigma(a, e).
    Verdict item2;
    // sigma(a, b) diamond sigma(a, c)' = sigma(a, c) diamond sigma(a, b)',
    // both idempotent; witness (a, b, c).
    Verdict item3;
    // sigma(a, b) ~_l sigma(a, c).
    Verdict item4;
    // sigma(a, b') diamond (a circ b)' = (a circ b') diamond sigma(a, b)'.
    Verdict item5;
    // (a circ b)' diamond sigma(a, b) = sigma(a, b')' diamond (a circ b').
    Verdict item6;
    // lambda(a, b') = lambda(a, b)'.
    Verdict item7;
    // lambda(a, e diamond b) = lambda(a, e) diamond lambda(a, b).
    Verdict item8;

    [[nodiscard]] std::array<Verdict const*, 8> items() const noexcept {
      return {&item1, &item2, &item3, &item4,
              &item5, &item6, &item7, &item8};
    }

    [[nodiscard]] bool all() const noexcept {
      for (auto const* v : items()) {
        if (!v->holds) {
          return false;
        }
      }
      return true;
    }
  };

  //! Nullopt when no valid lambda equals sigma(a, b)' diamond (a circ b).
  [[nodiscard]] inline std::optional<SigmaInverseReport>
  check_prop33(InverseSemiTruss const& t0) {
    auto const t = with_sigma_lambda(t0);
    if (!t) {
      return std::nullopt;
    }
    auto const  n   = static_cast<element>(t->size());
    auto const& d   = t->base.diamond;
    auto const& o   = t->base.circ;
    auto const& lam = t->base.lambda;
    auto const& is  = t->istr;
    auto const  inv = [&](element x) { return is.inverse(x); };
    auto const  sig = [&](element a, element b) { return t->sigma(a, b); };

    SigmaInverseReport r;
    r.lambda_substituted = !(t->base.lambda == t0.base.lambda);
    for (element a = 0; a < n; ++a) {
      for (element e : is.idempotent_set) {
        for (element b = 0; b < n; ++b) {
          element const s_eb = sig(a, d(e, b));
          element const sb   = sig(a, b);
          element const se   = sig(a, e);
          if (r.item1 && s_eb != d(d(se, inv(sb)), sb)) {
            r.item1 = Verdict::fail({a, e, b});
          }
          if (r.item2 && s_eb != d(d(sb, inv(se)), se)) {
            r.item2 = Verdict::fail({a, e, b});
          }
          if (r.item8 && lam(a, d(e, b)) != d(lam(a, e), lam(a, b))) {
            r.item8 = Verdict::fail({a, e, b});
          }
        }
      }
      for (element b = 0; b < n; ++b) {
        element const sb  = sig(a, b);
        element const ab  = o(a, b);
        element const abi = o(a, inv(b));
        element const sbi = sig(a, inv(b));
        for (element c = 0; c < n; ++c) {
          element const sc = sig(a, c);
          element const x  = d(sb, inv(sc));
          element const y  = d(sc, inv(sb));
          if (r.item3
              && !(x == y && is_idempotent(d, x))) {
            r.item3 = Verdict::fail({a, b, c});
          }
          if (r.item4 && !left_compatible(is, d, sb, sc)) {
            r.item4 = Verdict::fail({a, b, c});
          }
        }
        if (r.item5 && d(sbi, inv(ab)) != d(abi, inv(sb))) {
          r.item5 = Verdict::fail({a, b});
        }
        if (r.item6 && d(inv(ab), sb) != d(inv(sbi), abi)) {
          r.item6 = Verdict::fail({a, b});
        }
        if (r.item7 && lam(a, inv(b)) != inv(lam(a, b))) {
          r.item7 = Verdict::fail({a, b});
        }
      }
    }
    return r;
  }

  //! For all a and idempotents e, f: lambda(a, e) is idempotent and
  //! lambda(a, e diamond f) = lambda(a, e) diamond lambda(a, f).
  //!
  //! Throws errc::hypothesis_fails when no valid lambda equals
  //! sigma(a, b)' diamond (a circ b).
  [[nodiscard]] inline bool
  lambda_restricts_to_idempotents(InverseSemiTruss const& t0) {
    auto const t = with_sigma_lambda(t0);
    if (!t) {
      throw error(errc::hypothesis_fails,
                  "lambda is not of the form sigma(a, b)' (a circ b)");
    }
    auto const& d   = t->base.diamond;
    auto const& lam = t->base.lambda;
    auto const& E   = t->istr.idempotent_set;
    for (element a = 0; a < t->size(); ++a) {
      for (element e : E) {
        if (!is_idempotent(d, lam(a, e))) {
          return false;
        }
        for (element f : E) {
          if (lam(a, d(e, f)) != d(lam(a, e), lam(a, f))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Order inequalities for a diamond b = c in any inverse semigroup
  ////////////////////////////////////////////////////////////////////////

  struct OrderLemmaReport {
    // c diamond b' <= a; witness (a, b).
    Verdict right_cancel;
    // a' diamond c <= b.
    Verdict left_cancel;
    // b diamond c' <= a', then a diamond b diamond c' <= a diamond a',
    // then c diamond c' <= a diamond a'.
    Verdict range_chain;
    // c' diamond a <= b', then c' diamond a diamond b <= b' diamond b,
    // then c' diamond c <= b' diamond b.
    Verdict domain_chain;

    [[nodiscard]] bool all() const noexcept {
      return right_cancel.holds && left_cancel.holds && range_chain.holds
             && domain_chain.holds;
    }
  };

  //! Throws errc::not_inverse_semigroup.
  [[nodiscard]] inline OrderLemmaReport
  check_order_lemmas(FiniteBinaryOp const& op) {
    auto const is  = detail::require_inverse(op);
    auto const n   = static_cast<element>(op.size());
    auto const inv = [&](element x) { return is.inverse(x); };

    OrderLemmaReport r;
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        element const c = op(a, b);
        if (r.right_cancel && !is.le(op(c, inv(b)), a)) {
          r.right_cancel = Verdict::fail({a, b});
        }
        if (r.left_cancel && !is.le(op(inv(a), c), b)) {
          r.left_cancel = Verdict::fail({a, b});
        }
        element const aai = op(a, inv(a));
        if (r.range_chain
            && !(is.le(op(b, inv(c)), inv(a))
                 && is.le(op(a, op(b, inv(c))), aai)
                 && is.le(op(c, inv(c)), aai))) {
          r.range_chain = Verdict::fail({a, b});
        }
        element const bib = op(inv(b), b);
        if (r.domain_chain
            && !(is.le(op(inv(c), a), inv(b))
                 && is.le(op(op(inv(c), a), b), bib)
                 && is.le(op(inv(c), c), bib))) {
          r.domain_chain = Verdict::fail({a, b});
        }
      }
    }
    return r;
  }

}  // namespace semitruss

#endif  // SEMITRUSS_INVERSE_HPP_
