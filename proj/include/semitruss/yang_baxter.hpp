#ifndef SEMITRUSS_YANG_BAXTER_HPP_
#define SEMITRUSS_YANG_BAXTER_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cancellative.hpp"
#include "cayley.hpp"
#include "error.hpp"
#include "structure.hpp"

namespace semitruss {

  using Pair = std::pair<element, element>;

  //! A map A x A -> A x A as a dense table; (a, b) lives at index a * n + b.
  class PairMap {
   public:
    PairMap() = default;

    PairMap(std::size_t n, std::vector<Pair> map)
        : _n(n), _map(std::move(map)) {
      if (_n == 0 || _map.size() != _n * _n) {
        throw error(errc::size_mismatch, "pair map needs n * n entries");
      }
      for (auto const& [x, y] : _map) {
        if (x >= _n || y >= _n) {
          throw error(errc::range_error, "pair map entry outside carrier");
        }
      }
    }

    template <typename F>
    static PairMap from_function(std::size_t n, F&& f) {
      std::vector<Pair> map(n * n);
      for (element a = 0; a < n; ++a) {
        for (element b = 0; b < n; ++b) {
          map[a * n + b] = f(a, b);
        }
      }
      return PairMap(n, std::move(map));
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }
    [[nodiscard]] Pair operator()(element a, element b) const noexcept {
      return _map[a * _n + b];
    }
    [[nodiscard]] std::vector<Pair> const& table() const noexcept {
      return _map;
    }

    friend bool operator==(PairMap const&, PairMap const&) = default;

   private:
    std::size_t       _n = 0;
    std::vector<Pair> _map;
  };

  //! Builds
  //!
  //!   r(a, b) = (a e* x, e x* b),   x = (e a* e) diamond b,
  //!
  //! where juxtaposition is circ and * is the circ-inverse.
  //!
  //! Throws errc::not_group, errc::not_left_cancellative,
  //! errc::not_idempotent.
  [[nodiscard]] inline PairMap build_yb_from_semitruss(SemiTruss const& t,
                                                       element          e) {
    auto const ginv = group_inverse(t.circ);
    if (!ginv) {
      throw error(errc::not_group, "circ is not a group");
    }
    detail::require_left_cancellative(t.diamond);
    detail::require_idempotent(t.diamond, e);
    auto const& o    = t.circ;
    auto const& inv  = *ginv;
    auto const  einv = inv[e];
    return PairMap::from_function(t.size(), [&](element a, element b) {
      element const x = t.diamond(o(o(e, inv[a]), e), b);
      return Pair{o(o(a, einv), x), o(o(e, inv[x]), b)};
    });
  }

  //! r(a, b) = (a bullet (a^ diamond b), (a^ diamond b)^ bullet b), where ^
  //! is the bullet-inverse. Throws errc::not_semibrace.
  [[nodiscard]] inline PairMap
  build_yb_from_semibrace(FiniteBinaryOp const& diamond,
                          FiniteBinaryOp const& bullet) {
    auto const v = verify_semibrace(diamond, bullet);
    if (!v) {
      throw error(errc::not_semibrace, std::string(to_string(v.reason)));
    }
    auto const inv = *group_inverse(bullet);
    return PairMap::from_function(
        diamond.size(), [&](element a, element b) {
          element const x = diamond(inv[a], b);
          return Pair{bullet(a, x), bullet(inv[x], b)};
        });
  }

  struct YbeVerdict {
    bool holds = true;
    // First (a, b, c) where the two composites differ.
    std::optional<std::array<element, 3>> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  //! (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on every triple.
  [[nodiscard]] inline YbeVerdict verify_ybe(PairMap const& r) {
    auto const n = static_cast<element>(r.size());
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        for (element c = 0; c < n; ++c) {
          // (r x id), (id x r), (r x id)
          auto [x1, y1] = r(a, b);
          auto [y2, z2] = r(y1, c);
          auto [x3, y3] = r(x1, y2);
          // (id x r), (r x id), (id x r)
          auto [q1, r1] = r(b, c);
          auto [p2, q2] = r(a, q1);
          auto [q3, r3] = r(q2, r1);
          if (x3 != p2 || y3 != q3 || z2 != r3) {
            return {false, std::array<element, 3>{a, b, c}};
          }
        }
      }
    }
    return {};
  }

  [[nodiscard]] inline bool is_bijective(PairMap const& r) {
    auto const        n = r.size();
    std::vector<bool> hit(n * n);
    for (auto const& [x, y] : r.table()) {
      auto const i = x * n + y;
      if (hit[i]) {
        return false;
      }
      hit[i] = true;
    }
    return true;
  }

}  // namespace semitruss

#endif  // SEMITRUSS_YANG_BAXTER_HPP_
