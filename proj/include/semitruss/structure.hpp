#ifndef SEMITRUSS_STRUCTURE_HPP_
#define SEMITRUSS_STRUCTURE_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"

// Single-operation predicates and derived data: associativity, idempotents,
// identities, cancellation, group and inverse-semigroup structure.

namespace semitruss {

  [[nodiscard]] inline Verdict check_associative(FiniteBinaryOp const& op) {
    auto const n = static_cast<element>(op.size());
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        element const ab = op(a, b);
        for (element c = 0; c < n; ++c) {
          if (op(ab, c) != op(a, op(b, c))) {
            return Verdict::fail({a, b, c});
          }
        }
      }
    }
    return Verdict::pass();
  }

  [[nodiscard]] inline bool is_associative(FiniteBinaryOp const& op) {
    return check_associative(op).holds;
  }

  [[nodiscard]] inline std::vector<element>
  idempotents(FiniteBinaryOp const& op) {
    std::vector<element> result;
    for (element a = 0; a < op.size(); ++a) {
      if (op(a, a) == a) {
        result.push_back(a);
      }
    }
    return result;
  }

  [[nodiscard]] inline bool is_idempotent(FiniteBinaryOp const& op,
                                          element              a) {
    return op(a, a) == a;
  }

  [[nodiscard]] inline std::vector<element>
  left_identities(FiniteBinaryOp const& op) {
    auto const           n = static_cast<element>(op.size());
    std::vector<element> result;
    for (element e = 0; e < n; ++e) {
      bool ok = true;
      for (element a = 0; a < n && ok; ++a) {
        ok = op(e, a) == a;
      }
      if (ok) {
        result.push_back(e);
      }
    }
    return result;
  }

  [[nodiscard]] inline std::vector<element>
  right_identities(FiniteBinaryOp const& op) {
    auto const           n = static_cast<element>(op.size());
    std::vector<element> result;
    for (element e = 0; e < n; ++e) {
      bool ok = true;
      for (element a = 0; a < n && ok; ++a) {
        ok = op(a, e) == a;
      }
      if (ok) {
        result.push_back(e);
      }
    }
    return result;
  }

  [[nodiscard]] inline bool is_right_identity(FiniteBinaryOp const& op,
                                              element               e) {
    for (element a = 0; a < op.size(); ++a) {
      if (op(a, e) != a) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] inline std::optional<element>
  two_sided_identity(FiniteBinaryOp const& op) {
    auto const right = right_identities(op);
    for (element e : left_identities(op)) {
      for (element f : right) {
        if (e == f) {
          return e;
        }
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] inline bool is_left_cancellative(FiniteBinaryOp const& op) {
    auto const        n = op.size();
    std::vector<bool> seen(n);
    for (element a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), false);
      for (element b = 0; b < n; ++b) {
        element const ab = op(a, b);
        if (seen[ab]) {
          return false;
        }
        seen[ab] = true;
      }
    }
    return true;
  }

  //! The pre-order on a left-cancellative semigroup: a precedes b iff
  //! a * c = b for some c. Decided by bare existence scan.
  [[nodiscard]] inline bool precedes(FiniteBinaryOp const& op, element a,
                                     element b) {
    for (element c = 0; c < op.size(); ++c) {
      if (op(a, c) == b) {
        return true;
      }
    }
    return false;
  }

  //! The unique c with a * c = b in a left-cancellative semigroup, or
  //! nullopt when a does not precede b.
  //!
  //! Throws errc::not_left_cancellative if `op` is not a left-cancellative
  //! semigroup, since the quotient is then not well defined.
  [[nodiscard]] inline std::optional<element>
  left_quotient(FiniteBinaryOp const& op, element a, element b) {
    if (!is_left_cancellative(op) || !is_associative(op)) {
      throw error(errc::not_left_cancellative,
                  "left quotient needs a left-cancellative semigroup");
    }
    detail::check_element(op, a, "a");
    detail::check_element(op, b, "b");
    for (element c = 0; c < op.size(); ++c) {
      if (op(a, c) == b) {
        return c;
      }
    }
    return std::nullopt;
  }

  namespace detail {
    // Left quotient without precondition checks, for inner loops whose
    // callers have already validated the operation.
    inline std::optional<element> left_quotient_unchecked(
        FiniteBinaryOp const& op, element a, element b) noexcept {
      for (element c = 0; c < op.size(); ++c) {
        if (op(a, c) == b) {
          return c;
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  //! Inverse-semigroup data: the inverse map, the semilattice of
  //! idempotents, and the natural partial order.
  struct InverseStructure {
    std::vector<element> inv;
    std::vector<element> idempotent_set;
    // leq[a * n + b] is true iff a <= b.
    std::vector<bool> leq;

    [[nodiscard]] std::size_t size() const noexcept {
      return inv.size();
    }

    [[nodiscard]] element inverse(element a) const noexcept {
      return inv[a];
    }

    [[nodiscard]] bool le(element a, element b) const noexcept {
      return leq[a * inv.size() + b];
    }

    [[nodiscard]] bool is_idempotent(element a) const noexcept {
      return std::find(idempotent_set.begin(), idempotent_set.end(), a)
             != idempotent_set.end();
    }
  };

  //! Candidates x with a * x * a = a and x * a * x = x.
  [[nodiscard]] inline std::vector<element>
  semigroup_inverses(FiniteBinaryOp const& op, element a) {
    std::vector<element> result;
    for (element x = 0; x < op.size(); ++x) {
      if (op(op(a, x), a) == a && op(op(x, a), x) == x) {
        result.push_back(x);
      }
    }
    return result;
  }

  //! Throws errc::not_associative for a non-associative operation; returns
  //! nullopt when some element lacks a unique inverse.
  [[nodiscard]] inline std::optional<InverseStructure>
  inverse_structure(FiniteBinaryOp const& op) {
    if (!is_associative(op)) {
      throw error(errc::not_associative, "inverse structure of a magma");
    }
    auto const       n = op.size();
    InverseStructure result;
    result.inv.resize(n);
    for (element a = 0; a < n; ++a) {
      auto const cands = semigroup_inverses(op, a);
      if (cands.size() != 1) {
        return std::nullopt;
      }
      result.inv[a] = cands.front();
    }
    result.idempotent_set = idempotents(op);
    result.leq.assign(n * n, false);
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        for (element e : result.idempotent_set) {
          if (op(b, e) == a) {
            result.leq[a * n + b] = true;
            break;
          }
        }
      }
    }
    return result;
  }

  //! a ~_l b iff a * inv(b) is idempotent.
  [[nodiscard]] inline bool left_compatible(InverseStructure const& istr,
                                            FiniteBinaryOp const&   op,
                                            element a, element b) {
    detail::check_element(op, a, "a");
    detail::check_element(op, b, "b");
    return istr.is_idempotent(op(a, istr.inverse(b)));
  }

  struct StructureReport {
    bool                   associative = false;
    std::vector<element>   idempotents;
    std::vector<element>   left_identities;
    std::optional<element> two_sided_identity;
    bool                   left_cancellative = false;
    bool                   is_group          = false;
    // a -> a^{-1}; populated iff is_group.
    std::optional<std::vector<element>> group_inverse;
    bool                                is_inverse_semigroup = false;
  };

  [[nodiscard]] inline std::optional<std::vector<element>>
  group_inverse(FiniteBinaryOp const& op) {
    if (!is_associative(op)) {
      return std::nullopt;
    }
    auto const id = two_sided_identity(op);
    if (!id) {
      return std::nullopt;
    }
    auto const           n = op.size();
    std::vector<element> inv(n);
    for (element a = 0; a < n; ++a) {
      bool found = false;
      for (element b = 0; b < n && !found; ++b) {
        if (op(a, b) == *id && op(b, a) == *id) {
          inv[a] = b;
          found  = true;
        }
      }
      if (!found) {
        return std::nullopt;
      }
    }
    return inv;
  }

  [[nodiscard]] inline bool is_group(FiniteBinaryOp const& op) {
    return group_inverse(op).has_value();
  }

  [[nodiscard]] inline StructureReport
  structure_report(FiniteBinaryOp const& op) {
    StructureReport r;
    r.associative        = is_associative(op);
    r.idempotents        = idempotents(op);
    r.left_identities    = left_identities(op);
    r.two_sided_identity = two_sided_identity(op);
    r.left_cancellative  = is_left_cancellative(op);
    if (r.associative) {
      r.group_inverse        = group_inverse(op);
      r.is_group             = r.group_inverse.has_value();
      r.is_inverse_semigroup = inverse_structure(op).has_value();
    }
    return r;
  }

}  // namespace semitruss

#endif  // SEMITRUSS_STRUCTURE_HPP_
