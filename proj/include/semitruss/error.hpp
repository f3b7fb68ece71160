#ifndef SEMITRUSS_ERROR_HPP_
#define SEMITRUSS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semitruss {

  enum class errc {
    not_associative,
    not_left_cancellative,
    not_inverse_semigroup,
    not_idempotent,
    not_group,
    not_semibrace,
    not_semitruss,
    sigma_not_bijective,
    size_mismatch,
    lambda_missing,
    hypothesis_fails,
    carrier_too_large,
    invalid_element,
    parse_error,
    range_error,
    // A proven identity failed on an instance satisfying its hypotheses.
    theorem_violation,
  };

  constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
      case errc::not_associative: return "NotAssociative";
      case errc::not_left_cancellative: return "NotLeftCancellative";
      case errc::not_inverse_semigroup: return "NotInverseSemigroup";
      case errc::not_idempotent: return "NotIdempotent";
      case errc::not_group: return "NotGroup";
      case errc::not_semibrace: return "NotSemibrace";
      case errc::not_semitruss: return "NotSemitruss";
      case errc::sigma_not_bijective: return "SigmaNotBijective";
      case errc::size_mismatch: return "SizeMismatch";
      case errc::lambda_missing: return "LambdaMissing";
      case errc::hypothesis_fails: return "HypothesisFails";
      case errc::carrier_too_large: return "CarrierTooLarge";
      case errc::invalid_element: return "InvalidElement";
      case errc::parse_error: return "ParseError";
      case errc::range_error: return "RangeError";
      case errc::theorem_violation: return "TheoremViolation";
    }
    return "Unknown";
  }

  class error : public std::runtime_error {
   public:
    error(errc code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    [[nodiscard]] errc code() const noexcept {
      return _code;
    }

   private:
    errc _code;
  };

  // Text-format failures. Line and column are 1-based; column 0 means the
  // whole line.
  class parse_error : public error {
   public:
    parse_error(errc code, std::size_t line, std::size_t column,
                std::string const& what)
        : error(code,
                "line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }
    [[nodiscard]] std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace semitruss

#endif  // SEMITRUSS_ERROR_HPP_
