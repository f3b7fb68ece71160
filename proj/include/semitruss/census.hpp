#ifndef SEMITRUSS_CENSUS_HPP_
#define SEMITRUSS_CENSUS_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cancellative.hpp"
#include "cayley.hpp"
#include "error.hpp"
#include "structure.hpp"
#include "yang_baxter.hpp"

// Exhaustive enumeration of semigroups and semi-truss pairs on small
// carriers, and the census built on top of it.

namespace semitruss {

  //! Largest carrier the enumerator accepts; n = 4 needs allow_large.
  constexpr std::size_t max_carrier = 4;

  struct EnumerationOptions {
    // Permit n = 4.
    bool allow_large = false;
    // 0 means: SEMITRUSS_WORKERS if set, else hardware concurrency.
    unsigned workers = 0;
  };

  inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) {
      return requested;
    }
    if (char const* env = std::getenv("SEMITRUSS_WORKERS")) {
      char* end = nullptr;
      auto  v   = std::strtoul(env, &end, 10);
      if (end != env && v > 0) {
        return static_cast<unsigned>(v);
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  namespace detail {
    inline void require_carrier(std::size_t n, bool allow_large) {
      if (n == 0 || n > max_carrier) {
        throw error(errc::carrier_too_large,
                    "carrier size " + std::to_string(n) + " not in [1, "
                        + std::to_string(max_carrier) + "]");
      }
      if (n == max_carrier && !allow_large) {
        throw error(errc::carrier_too_large,
                    "carrier size 4 requires the large-carrier flag");
      }
    }

    // Runs job(i) for i in [0, count) on a pool of workers and returns the
    // results in index order, independent of scheduling.
    template <typename R, typename F>
    std::vector<R> parallel_indexed(std::size_t count, unsigned workers,
                                    F&& job) {
      std::vector<R> results(count);
      workers = std::min<unsigned>(workers, static_cast<unsigned>(count));
      if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
          results[i] = job(i);
        }
        return results;
      }
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      std::exception_ptr       failure;
      std::atomic<bool>        failed{false};
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < count; i = next++) {
            try {
              results[i] = job(i);
            } catch (...) {
              if (!failed.exchange(true)) {
                failure = std::current_exception();
              }
              return;
            }
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
      if (failure) {
        std::rethrow_exception(failure);
      }
      return results;
    }

    // Backtracking over cells in row-major order with the first row
    // preset. After each assignment every triple whose four lookups are
    // all assigned is checked, so a partial table is abandoned as soon as
    // it contains a violated instance of associativity.
    class SemigroupSearch {
     public:
      SemigroupSearch(std::size_t n, std::vector<element> first_row)
          : _n(n), _cells(n * n), _table(n * n, 0) {
        std::copy(first_row.begin(), first_row.end(), _table.begin());
      }

      template <typename Visitor>
      void run(Visitor&& visit) {
        // The preset first row must itself be consistent.
        for (std::size_t k = 0; k < _n; ++k) {
          if (!consistent(k)) {
            return;
          }
        }
        descend(_n, visit);
      }

     private:
      bool known(element a, element b, std::size_t filled) const noexcept {
        return a * _n + b <= filled;
      }

      // Checks triples that involve only cells with index <= filled.
      bool consistent(std::size_t filled) const noexcept {
        auto const n = static_cast<element>(_n);
        for (element a = 0; a < n; ++a) {
          for (element b = 0; b < n; ++b) {
            if (!known(a, b, filled)) {
              continue;
            }
            element const ab = _table[a * _n + b];
            for (element c = 0; c < n; ++c) {
              if (!known(b, c, filled) || !known(ab, c, filled)) {
                continue;
              }
              element const bc = _table[b * _n + c];
              if (!known(a, bc, filled)) {
                continue;
              }
              if (_table[ab * _n + c] != _table[a * _n + bc]) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename Visitor>
      void descend(std::size_t k, Visitor& visit) {
        if (k == _cells) {
          visit(FiniteBinaryOp(_n, _table));
          return;
        }
        for (element v = 0; v < _n; ++v) {
          _table[k] = v;
          if (consistent(k)) {
            descend(k + 1, visit);
          }
        }
        _table[k] = 0;
      }

      std::size_t          _n;
      std::size_t          _cells;
      std::vector<element> _table;
    };

    inline std::vector<element> nth_row(std::size_t n, std::size_t index) {
      std::vector<element> row(n);
      for (std::size_t i = n; i-- > 0;) {
        row[i] = static_cast<element>(index % n);
        index /= n;
      }
      return row;
    }

    inline std::size_t ipow(std::size_t base, std::size_t exp) {
      std::size_t r = 1;
      while (exp-- > 0) {
        r *= base;
      }
      return r;
    }
  }  // namespace detail

  //! All associative tables on {0, ..., n - 1}, in lexicographic order of
  //! the row-major table. The search is split by first row across workers;
  //! output order does not depend on the worker count.
  //!
  //! Throws errc::carrier_too_large.
  [[nodiscard]] inline std::vector<FiniteBinaryOp>
  enumerate_semigroups(std::size_t n, EnumerationOptions const& opts = {}) {
    detail::require_carrier(n, opts.allow_large);
    auto const parts = detail::ipow(n, n);
    auto       chunks = detail::parallel_indexed<std::vector<FiniteBinaryOp>>(
        parts, resolve_workers(opts.workers), [n](std::size_t i) {
          std::vector<FiniteBinaryOp> found;
          detail::SemigroupSearch(n, detail::nth_row(n, i))
              .run([&](FiniteBinaryOp op) { found.push_back(std::move(op)); });
          return found;
        });
    std::vector<FiniteBinaryOp> result;
    for (auto& c : chunks) {
      result.insert(result.end(), std::make_move_iterator(c.begin()),
                    std::make_move_iterator(c.end()));
    }
    return result;
  }

  //! Per-semigroup properties used for filtering and bucketing.
  struct SemigroupInfo {
    FiniteBinaryOp       op;
    bool                 left_cancellative = false;
    bool                 inverse           = false;
    bool                 group             = false;
    std::vector<element> idempotents;
  };

  [[nodiscard]] inline SemigroupInfo classify(FiniteBinaryOp op) {
    SemigroupInfo info;
    info.left_cancellative = is_left_cancellative(op);
    info.inverse           = inverse_structure(op).has_value();
    info.group             = is_group(op);
    info.idempotents       = idempotents(op);
    info.op                = std::move(op);
    return info;
  }

  struct SemitrussFilter {
    bool diamond_left_cancellative = false;
    bool diamond_inverse           = false;
    bool diamond_group             = false;
    bool circ_group                = false;

    [[nodiscard]] bool restricts_diamond() const noexcept {
      return diamond_left_cancellative || diamond_inverse || diamond_group;
    }
    [[nodiscard]] bool accepts_diamond(SemigroupInfo const& s) const noexcept {
      return (!diamond_left_cancellative || s.left_cancellative)
             && (!diamond_inverse || s.inverse)
             && (!diamond_group || s.group);
    }
    [[nodiscard]] bool accepts_circ(SemigroupInfo const& s) const noexcept {
      return !circ_group || s.group;
    }

    //! Recognised names: diamond-left-cancellative, diamond-inverse,
    //! diamond-group, circ-group. Returns false for anything else.
    bool set(std::string_view name) noexcept {
      if (name == "diamond-left-cancellative") {
        diamond_left_cancellative = true;
      } else if (name == "diamond-inverse") {
        diamond_inverse = true;
      } else if (name == "diamond-group") {
        diamond_group = true;
      } else if (name == "circ-group") {
        circ_group = true;
      } else {
        return false;
      }
      return true;
    }

    [[nodiscard]] std::vector<std::string> names() const {
      std::vector<std::string> out;
      if (diamond_left_cancellative) {
        out.emplace_back("diamond-left-cancellative");
      }
      if (diamond_inverse) {
        out.emplace_back("diamond-inverse");
      }
      if (diamond_group) {
        out.emplace_back("diamond-group");
      }
      if (circ_group) {
        out.emplace_back("circ-group");
      }
      return out;
    }
  };

  namespace detail {
    inline void require_pair_space(std::size_t                n,
                                   SemitrussFilter const&     filter,
                                   EnumerationOptions const& opts) {
      require_carrier(n, opts.allow_large);
      if (n == max_carrier && !filter.restricts_diamond()) {
        throw error(errc::carrier_too_large,
                    "semi-truss pairs on 4 elements need a diamond filter");
      }
    }

    inline std::vector<SemigroupInfo>
    classified_semigroups(std::size_t n, EnumerationOptions const& opts) {
      auto                       ops = enumerate_semigroups(n, opts);
      std::vector<SemigroupInfo> out;
      out.reserve(ops.size());
      for (auto& op : ops) {
        out.push_back(classify(std::move(op)));
      }
      return out;
    }
  }  // namespace detail

  //! Every semi-truss (diamond, circ, derived lambda) over ordered pairs of
  //! semigroups accepted by `filter`, diamond-major in enumeration order.
  //!
  //! Throws errc::carrier_too_large, including for n = 4 without a filter
  //! on diamond.
  [[nodiscard]] inline std::vector<SemiTruss>
  enumerate_semitrusses(std::size_t n, SemitrussFilter const& filter = {},
                        EnumerationOptions const& opts = {}) {
    detail::require_pair_space(n, filter, opts);
    auto const sgs = detail::classified_semigroups(n, opts);
    std::vector<std::size_t> diamonds, circs;
    for (std::size_t i = 0; i < sgs.size(); ++i) {
      if (filter.accepts_diamond(sgs[i])) {
        diamonds.push_back(i);
      }
      if (filter.accepts_circ(sgs[i])) {
        circs.push_back(i);
      }
    }
    auto chunks = detail::parallel_indexed<std::vector<SemiTruss>>(
        diamonds.size(), resolve_workers(opts.workers), [&](std::size_t i) {
          std::vector<SemiTruss> found;
          for (auto j : circs) {
            if (auto t = derive_semitruss(sgs[diamonds[i]].op, sgs[j].op)) {
              found.push_back(std::move(*t));
            }
          }
          return found;
        });
    std::vector<SemiTruss> result;
    for (auto& c : chunks) {
      result.insert(result.end(), std::make_move_iterator(c.begin()),
                    std::make_move_iterator(c.end()));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism classes
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    using Code = std::vector<std::uint8_t>;

    inline std::vector<std::vector<element>> permutations(std::size_t n) {
      std::vector<element> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::vector<element>> all;
      do {
        all.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return all;
    }

    inline void append_relabelled(Code& out, FiniteBinaryOp const& op,
                                  std::vector<element> const& p,
                                  std::vector<element> const& pinv) {
      auto const n = op.size();
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          out.push_back(
              static_cast<std::uint8_t>(p[op(pinv[x], pinv[y])]));
        }
      }
    }

    // Lexicographically least relabelling of the tuple of tables under
    // the simultaneous action of the symmetric group.
    inline Code canonical_code(std::vector<FiniteBinaryOp const*> const& ops,
                               std::vector<std::vector<element>> const& perms) {
      Code best;
      Code cur;
      std::vector<element> pinv;
      for (auto const& p : perms) {
        pinv.assign(p.size(), 0);
        for (element i = 0; i < p.size(); ++i) {
          pinv[p[i]] = i;
        }
        cur.clear();
        for (auto const* op : ops) {
          append_relabelled(cur, *op, p, pinv);
        }
        if (best.empty() || cur < best) {
          best = cur;
        }
      }
      return best;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////

  struct CensusCounts {
    std::uint64_t total_tables                = 0;
    std::uint64_t associative                 = 0;
    std::uint64_t left_cancellative_semigroups = 0;
    std::uint64_t inverse_semigroups          = 0;
    std::uint64_t groups                      = 0;
    // Ordered pairs (diamond, circ) passing the filter that admit a lambda.
    std::uint64_t semitruss_pairs = 0;
    // ... whose lambda is forced in every cell.
    std::uint64_t lambda_unique_pairs = 0;
    // ... with circ a group and diamond left cancellative with an
    // idempotent, so the semi-brace conversion applies.
    std::uint64_t group_circ_convertible = 0;
    // ... whose Yang-Baxter map passes for every idempotent.
    std::uint64_t ybe_pass = 0;

    friend bool operator==(CensusCounts const&, CensusCounts const&)
        = default;
  };

  struct CensusOptions {
    SemitrussFilter    filter;
    EnumerationOptions enumeration;
    // Also count isomorphism classes under relabelling of the carrier.
    bool iso = false;
  };

  struct CensusRecord {
    std::size_t                 n = 0;
    std::vector<std::string>    filters;
    CensusCounts                labeled;
    std::optional<CensusCounts> isomorphism_classes;
    std::chrono::nanoseconds    wall_time{0};
  };

  namespace detail {
    struct PairBuckets {
      CensusCounts        counts;
      std::set<Code>      semitruss, unique, convertible, ybe;
    };

    inline PairBuckets census_row(std::vector<SemigroupInfo> const& sgs,
                                  std::size_t diamond_index,
                                  SemitrussFilter const& filter, bool iso,
                                  std::vector<std::vector<element>> const& perms) {
      PairBuckets out;
      auto const& d = sgs[diamond_index];
      for (auto const& c : sgs) {
        if (!filter.accepts_circ(c)) {
          continue;
        }
        auto const t = derive_semitruss(d.op, c.op);
        if (!t) {
          continue;
        }
        Code code;
        if (iso) {
          code = canonical_code({&d.op, &c.op}, perms);
        }
        ++out.counts.semitruss_pairs;
        if (iso) {
          out.semitruss.insert(code);
        }
        if (std::find(t->lambda_unique.begin(), t->lambda_unique.end(), false)
            == t->lambda_unique.end()) {
          ++out.counts.lambda_unique_pairs;
          if (iso) {
            out.unique.insert(code);
          }
        }
        if (!(c.group && d.left_cancellative && !d.idempotents.empty())) {
          continue;
        }
        ++out.counts.group_circ_convertible;
        if (iso) {
          out.convertible.insert(code);
        }
        bool all_pass = true;
        for (element e : d.idempotents) {
          all_pass = all_pass && verify_ybe(build_yb_from_semitruss(*t, e)).holds;
        }
        if (all_pass) {
          ++out.counts.ybe_pass;
          if (iso) {
            out.ybe.insert(code);
          }
        }
      }
      return out;
    }
  }  // namespace detail

  //! Throws errc::carrier_too_large.
  [[nodiscard]] inline CensusRecord run_census(std::size_t          n,
                                               CensusOptions const& opts = {}) {
    auto const start = std::chrono::steady_clock::now();
    detail::require_pair_space(n, opts.filter, opts.enumeration);

    auto const sgs = detail::classified_semigroups(n, opts.enumeration);
    auto const perms
        = opts.iso ? detail::permutations(n) : std::vector<std::vector<element>>{};

    CensusRecord rec;
    rec.n       = n;
    rec.filters = opts.filter.names();
    auto& lab   = rec.labeled;
    lab.total_tables = detail::ipow(n, n * n);

    std::set<detail::Code> iso_assoc, iso_lc, iso_inv, iso_grp;
    for (auto const& s : sgs) {
      ++lab.associative;
      lab.left_cancellative_semigroups += s.left_cancellative;
      lab.inverse_semigroups += s.inverse;
      lab.groups += s.group;
      if (opts.iso) {
        auto code = detail::canonical_code({&s.op}, perms);
        iso_assoc.insert(code);
        if (s.left_cancellative) {
          iso_lc.insert(code);
        }
        if (s.inverse) {
          iso_inv.insert(code);
        }
        if (s.group) {
          iso_grp.insert(code);
        }
      }
    }

    std::vector<std::size_t> diamonds;
    for (std::size_t i = 0; i < sgs.size(); ++i) {
      if (opts.filter.accepts_diamond(sgs[i])) {
        diamonds.push_back(i);
      }
    }
    auto rows = detail::parallel_indexed<detail::PairBuckets>(
        diamonds.size(), resolve_workers(opts.enumeration.workers),
        [&](std::size_t i) {
          return detail::census_row(sgs, diamonds[i], opts.filter, opts.iso,
                                    perms);
        });

    detail::PairBuckets all;
    for (auto& r : rows) {
      lab.semitruss_pairs += r.counts.semitruss_pairs;
      lab.lambda_unique_pairs += r.counts.lambda_unique_pairs;
      lab.group_circ_convertible += r.counts.group_circ_convertible;
      lab.ybe_pass += r.counts.ybe_pass;
      if (opts.iso) {
        all.semitruss.merge(r.semitruss);
        all.unique.merge(r.unique);
        all.convertible.merge(r.convertible);
        all.ybe.merge(r.ybe);
      }
    }

    if (opts.iso) {
      CensusCounts ic;
      ic.associative                 = iso_assoc.size();
      ic.left_cancellative_semigroups = iso_lc.size();
      ic.inverse_semigroups          = iso_inv.size();
      ic.groups                      = iso_grp.size();
      ic.semitruss_pairs             = all.semitruss.size();
      ic.lambda_unique_pairs         = all.unique.size();
      ic.group_circ_convertible      = all.convertible.size();
      ic.ybe_pass                    = all.ybe.size();
      rec.isomorphism_classes        = ic;
    }
    rec.wall_time = std::chrono::steady_clock::now() - start;
    return rec;
  }

}  // namespace semitruss

#endif  // SEMITRUSS_CENSUS_HPP_
