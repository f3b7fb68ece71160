#ifndef SEMITRUSS_CAYLEY_HPP_
#define SEMITRUSS_CAYLEY_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace semitruss {

  using element = std::uint32_t;

  //! A binary operation on the carrier {0, ..., n - 1}, stored as a dense
  //! row-major Cayley table. The left operand indexes the row, so
  //! `op(a, b)` is the entry in row `a`, column `b`.
  class FiniteBinaryOp {
   public:
    FiniteBinaryOp() = default;

    FiniteBinaryOp(std::size_t n, std::vector<element> table)
        : _n(n), _table(std::move(table)) {
      validate();
    }

    FiniteBinaryOp(std::initializer_list<std::initializer_list<element>> rows)
        : _n(rows.size()) {
      _table.reserve(_n * _n);
      for (auto const& row : rows) {
        if (row.size() != _n) {
          throw error(errc::size_mismatch, "ragged row in table literal");
        }
        _table.insert(_table.end(), row.begin(), row.end());
      }
      validate();
    }

    template <typename F>
    static FiniteBinaryOp from_function(std::size_t n, F&& f) {
      std::vector<element> table(n * n);
      for (element a = 0; a < n; ++a) {
        for (element b = 0; b < n; ++b) {
          table[a * n + b] = static_cast<element>(f(a, b));
        }
      }
      return FiniteBinaryOp(n, std::move(table));
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    [[nodiscard]] element operator()(element a, element b) const noexcept {
      return _table[a * _n + b];
    }

    [[nodiscard]] std::vector<element> const& table() const noexcept {
      return _table;
    }

    [[nodiscard]] bool contains(element a) const noexcept {
      return a < _n;
    }

    friend bool operator==(FiniteBinaryOp const&, FiniteBinaryOp const&)
        = default;
    friend auto operator<=>(FiniteBinaryOp const&, FiniteBinaryOp const&)
        = default;

   private:
    void validate() const {
      if (_n == 0) {
        throw error(errc::size_mismatch, "carrier must be non-empty");
      }
      if (_table.size() != _n * _n) {
        throw error(errc::size_mismatch,
                    "table has " + std::to_string(_table.size())
                        + " entries, expected " + std::to_string(_n * _n));
      }
      for (element x : _table) {
        if (x >= _n) {
          throw error(errc::range_error,
                      "entry " + std::to_string(x) + " outside carrier of size "
                          + std::to_string(_n));
        }
      }
    }

    std::size_t          _n = 0;
    std::vector<element> _table;
  };

  //! Outcome of an exhaustive law check. When the law fails, `witness` holds
  //! the first failing tuple in lexicographic quantifier order.
  struct Verdict {
    bool                 holds = true;
    std::vector<element> witness;

    static Verdict pass() {
      return {};
    }
    static Verdict fail(std::vector<element> w) {
      return {false, std::move(w)};
    }

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  inline Verdict operator&&(Verdict const& x, Verdict const& y) {
    return x.holds ? y : x;
  }

  //! Cayley-table text: the size on the first line, then one line per row.
  inline std::string to_string(FiniteBinaryOp const& op) {
    std::string out = std::to_string(op.size()) + "\n";
    for (element a = 0; a < op.size(); ++a) {
      for (element b = 0; b < op.size(); ++b) {
        if (b != 0) {
          out += ' ';
        }
        out += std::to_string(op(a, b));
      }
      out += '\n';
    }
    return out;
  }

  namespace detail {
    inline void check_element(FiniteBinaryOp const& op, element a,
                              char const* what) {
      if (!op.contains(a)) {
        throw error(errc::invalid_element,
                    std::string(what) + " = " + std::to_string(a)
                        + " outside carrier of size "
                        + std::to_string(op.size()));
      }
    }

    inline void check_same_size(FiniteBinaryOp const& x,
                                FiniteBinaryOp const& y) {
      if (x.size() != y.size()) {
        throw error(errc::size_mismatch,
                    "carrier sizes " + std::to_string(x.size()) + " and "
                        + std::to_string(y.size()));
      }
    }
  }  // namespace detail

}  // namespace semitruss

#endif  // SEMITRUSS_CAYLEY_HPP_
