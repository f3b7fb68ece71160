#ifndef SEMITRUSS_TESTS_ORACLE_HPP_
#define SEMITRUSS_TESTS_ORACLE_HPP_

// Naive reference implementations sharing no code with the library.
// Tables are plain int vectors and every search is an unpruned full scan.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <semitruss/cayley.hpp>

namespace oracle {

  struct Op {
    int              n = 0;
    std::vector<int> t;
    int operator()(int a, int b) const {
      return t[a * n + b];
    }
  };

  inline semitruss::FiniteBinaryOp to_lib(Op const& op) {
    return semitruss::FiniteBinaryOp(
        op.n, std::vector<semitruss::element>(op.t.begin(), op.t.end()));
  }

  inline Op from_lib(semitruss::FiniteBinaryOp const& op) {
    Op out;
    out.n = static_cast<int>(op.size());
    out.t.assign(op.table().begin(), op.table().end());
    return out;
  }

  inline bool associative(Op const& m) {
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b)
        for (int c = 0; c < m.n; ++c)
          if (m(m(a, b), c) != m(a, m(b, c))) return false;
    return true;
  }

  // Every table on n elements in lexicographic order of the flat table.
  inline std::vector<Op> all_tables(int n) {
    std::vector<Op> out;
    Op              m{n, std::vector<int>(n * n, 0)};
    while (true) {
      out.push_back(m);
      int i = n * n - 1;
      while (i >= 0 && m.t[i] == n - 1) m.t[i--] = 0;
      if (i < 0) break;
      ++m.t[i];
    }
    return out;
  }

  inline std::vector<Op> semigroups(int n) {
    std::vector<Op> out;
    for (auto const& m : all_tables(n))
      if (associative(m)) out.push_back(m);
    return out;
  }

  inline bool left_cancellative(Op const& m) {
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b)
        for (int c = b + 1; c < m.n; ++c)
          if (m(a, b) == m(a, c)) return false;
    return true;
  }

  inline int count_inverses(Op const& m, int a) {
    int k = 0;
    for (int x = 0; x < m.n; ++x)
      if (m(m(a, x), a) == a && m(m(x, a), x) == x) ++k;
    return k;
  }

  inline bool inverse_semigroup(Op const& m) {
    for (int a = 0; a < m.n; ++a)
      if (count_inverses(m, a) != 1) return false;
    return true;
  }

  inline int inverse_of(Op const& m, int a) {
    for (int x = 0; x < m.n; ++x)
      if (m(m(a, x), a) == a && m(m(x, a), x) == x) return x;
    return -1;
  }

  // Identity element, or -1.
  inline int identity(Op const& m) {
    for (int e = 0; e < m.n; ++e) {
      bool ok = true;
      for (int a = 0; a < m.n; ++a)
        if (m(e, a) != a || m(a, e) != a) ok = false;
      if (ok) return e;
    }
    return -1;
  }

  inline bool group(Op const& m) {
    int const e = identity(m);
    if (e < 0) return false;
    for (int a = 0; a < m.n; ++a) {
      bool found = false;
      for (int b = 0; b < m.n; ++b)
        if (m(a, b) == e && m(b, a) == e) found = true;
      if (!found) return false;
    }
    return true;
  }

  inline int group_inv(Op const& m, int a) {
    int const e = identity(m);
    for (int b = 0; b < m.n; ++b)
      if (m(a, b) == e) return b;
    return -1;
  }

  inline std::vector<int> idempotents(Op const& m) {
    std::vector<int> out;
    for (int a = 0; a < m.n; ++a)
      if (m(a, a) == a) out.push_back(a);
    return out;
  }

  // Number of x with a∘(b⋄c) = (a∘b)⋄x for all b.
  inline int lambda_choices(Op const& d, Op const& c, int a, int z) {
    int k = 0;
    for (int x = 0; x < d.n; ++x) {
      bool ok = true;
      for (int b = 0; b < d.n; ++b)
        if (c(a, d(b, z)) != d(c(a, b), x)) ok = false;
      if (ok) ++k;
    }
    return k;
  }

  inline int min_lambda(Op const& d, Op const& c, int a, int z) {
    for (int x = 0; x < d.n; ++x) {
      bool ok = true;
      for (int b = 0; b < d.n; ++b)
        if (c(a, d(b, z)) != d(c(a, b), x)) ok = false;
      if (ok) return x;
    }
    return -1;
  }

  inline bool law_holds(Op const& d, Op const& c, Op const& l) {
    for (int a = 0; a < d.n; ++a)
      for (int b = 0; b < d.n; ++b)
        for (int z = 0; z < d.n; ++z)
          if (c(a, d(b, z)) != d(c(a, b), l(a, z))) return false;
    return true;
  }

  // r(a, b) = (a∘e*∘x, e∘x*∘b) with x = (e∘a*∘e)⋄b; * is the ∘-inverse.
  inline std::vector<std::pair<int, int>> yb_map(Op const& d, Op const& c,
                                                 int e) {
    std::vector<std::pair<int, int>> r(d.n * d.n);
    auto inv = [&](int a) { return group_inv(c, a); };
    for (int a = 0; a < d.n; ++a)
      for (int b = 0; b < d.n; ++b) {
        int const x = d(c(c(e, inv(a)), e), b);
        r[a * d.n + b] = {c(c(a, inv(e)), x), c(c(e, inv(x)), b)};
      }
    return r;
  }

  inline bool ybe(std::vector<std::pair<int, int>> const& r, int n) {
    auto R = [&](int a, int b) { return r[a * n + b]; };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int z = 0; z < n; ++z) {
          auto [x1, y1] = R(a, b);
          auto [y2, z2] = R(y1, z);
          auto [x3, y3] = R(x1, y2);
          auto [u1, v1] = R(b, z);
          auto [p2, u2] = R(a, u1);
          auto [q3, w3] = R(u2, v1);
          if (x3 != p2 || y3 != q3 || z2 != w3) return false;
        }
    return true;
  }

  struct Counts {
    std::uint64_t total = 0, associative = 0, left_cancellative = 0,
                  inverse = 0, groups = 0, pairs = 0, unique = 0,
                  convertible = 0, ybe = 0;
  };

  struct Filter {
    bool d_lc = false, d_inv = false, d_group = false, c_group = false;
  };

  // Canonical form of a pair of tables under relabelling.
  inline std::vector<int> canonical(std::vector<Op const*> const& ops) {
    int const        n = ops.front()->n;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> best;
    do {
      std::vector<int> pinv(n);
      for (int i = 0; i < n; ++i) pinv[p[i]] = i;
      std::vector<int> code;
      for (auto const* m : ops)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            code.push_back(p[(*m)(pinv[a], pinv[b])]);
      if (best.empty() || code < best) best = code;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  struct Census {
    Counts labeled;
    Counts iso;
  };

  inline Census census(int n, Filter f = {}) {
    Census                      out;
    std::set<std::vector<int>>  s_assoc, s_lc, s_inv, s_grp, s_pairs,
        s_unique, s_conv, s_ybe;
    auto const all = all_tables(n);
    out.labeled.total = all.size();
    std::vector<Op> sg;
    for (auto const& m : all) {
      if (!associative(m)) continue;
      sg.push_back(m);
      auto const code = canonical({&m});
      ++out.labeled.associative;
      s_assoc.insert(code);
      if (left_cancellative(m)) {
        ++out.labeled.left_cancellative;
        s_lc.insert(code);
      }
      if (inverse_semigroup(m)) {
        ++out.labeled.inverse;
        s_inv.insert(code);
      }
      if (group(m)) {
        ++out.labeled.groups;
        s_grp.insert(code);
      }
    }
    for (auto const& d : sg) {
      if (f.d_lc && !left_cancellative(d)) continue;
      if (f.d_inv && !inverse_semigroup(d)) continue;
      if (f.d_group && !group(d)) continue;
      for (auto const& c : sg) {
        if (f.c_group && !group(c)) continue;
        bool exists = true, unique = true;
        Op   lam{n, std::vector<int>(n * n)};
        for (int a = 0; a < n; ++a)
          for (int z = 0; z < n; ++z) {
            int const k = lambda_choices(d, c, a, z);
            if (k == 0) exists = false;
            if (k != 1) unique = false;
            lam.t[a * n + z] = min_lambda(d, c, a, z);
          }
        if (!exists) continue;
        auto const code = canonical({&d, &c});
        ++out.labeled.pairs;
        s_pairs.insert(code);
        if (unique) {
          ++out.labeled.unique;
          s_unique.insert(code);
        }
        auto const ids = idempotents(d);
        if (!group(c) || !left_cancellative(d) || ids.empty()) continue;
        ++out.labeled.convertible;
        s_conv.insert(code);
        bool all = true;
        for (int e : ids)
          if (!ybe(yb_map(d, c, e), n)) all = false;
        if (all) {
          ++out.labeled.ybe;
          s_ybe.insert(code);
        }
      }
    }
    out.iso = {0,
               s_assoc.size(),
               s_lc.size(),
               s_inv.size(),
               s_grp.size(),
               s_pairs.size(),
               s_unique.size(),
               s_conv.size(),
               s_ybe.size()};
    return out;
  }

}  // namespace oracle

namespace fixtures {
  using semitruss::FiniteBinaryOp;

  inline FiniteBinaryOp z2() {
    return {{0, 1}, {1, 0}};
  }
  inline FiniteBinaryOp z3() {
    return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  }
  // a * b = b
  inline FiniteBinaryOp right_projection() {
    return {{0, 1}, {0, 1}};
  }
  // a * b = a
  inline FiniteBinaryOp left_zero() {
    return {{0, 0}, {1, 1}};
  }
  inline FiniteBinaryOp meet() {
    return {{0, 0}, {0, 1}};
  }
  inline FiniteBinaryOp constant_zero() {
    return {{0, 0}, {0, 0}};
  }
}  // namespace fixtures

#endif  // SEMITRUSS_TESTS_ORACLE_HPP_
