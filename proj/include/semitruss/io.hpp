#ifndef SEMITRUSS_IO_HPP_
#define SEMITRUSS_IO_HPP_

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "yang_baxter.hpp"

// Text formats.
//
// Cayley table: the first line holds n, then n rows of n space-separated
// integers, row a listing a*0 ... a*(n-1). Blank lines and lines starting
// with '#' are ignored.
//
// Bundle: two or three Cayley blocks (diamond, circ, optional lambda)
// separated by lines consisting of "---".
//
// Pair map: n on the first line, then n^2 lines "a b -> x y" in row-major
// order of (a, b).

namespace semitruss {

  namespace detail {
    struct Line {
      std::size_t      number;  // 1-based within the source
      std::string_view text;
    };

    inline std::vector<Line> split_lines(std::string_view text,
                                         std::size_t      first_line = 1) {
      std::vector<Line> out;
      std::size_t       pos = 0;
      std::size_t       num = first_line;
      while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
          line.remove_suffix(1);
        }
        out.push_back({num++, line});
        if (end == text.size()) {
          break;
        }
        pos = end + 1;
      }
      return out;
    }

    inline bool is_space(char c) noexcept {
      return c == ' ' || c == '\t';
    }

    inline bool is_ignorable(std::string_view line) noexcept {
      std::size_t i = 0;
      while (i < line.size() && is_space(line[i])) {
        ++i;
      }
      return i == line.size() || line[i] == '#';
    }

    struct Token {
      std::size_t      column;  // 1-based
      std::string_view text;
    };

    inline std::vector<Token> tokenize(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) {
          ++i;
        }
        auto const start = i;
        while (i < line.size() && !is_space(line[i])) {
          ++i;
        }
        if (i > start) {
          out.push_back({start + 1, line.substr(start, i - start)});
        }
      }
      return out;
    }

    inline std::uint64_t parse_uint(Token const& tok, std::size_t line) {
      std::uint64_t v   = 0;
      auto const*   beg = tok.text.data();
      auto const*   end = beg + tok.text.size();
      auto [ptr, ec]    = std::from_chars(beg, end, v);
      if (ec != std::errc{} || ptr != end) {
        throw parse_error(errc::parse_error, line, tok.column,
                          "expected a non-negative integer, found '"
                              + std::string(tok.text) + "'");
      }
      return v;
    }

    inline FiniteBinaryOp parse_cayley_lines(std::vector<Line> const& lines,
                                             std::size_t eof_line) {
      std::vector<Line> content;
      for (auto const& l : lines) {
        if (!is_ignorable(l.text)) {
          content.push_back(l);
        }
      }
      if (content.empty()) {
        throw parse_error(errc::parse_error, eof_line, 0,
                          "missing carrier size");
      }
      auto const head = tokenize(content[0].text);
      if (head.size() != 1) {
        throw parse_error(errc::parse_error, content[0].number,
                          head.size() > 1 ? head[1].column : 0,
                          "first line must hold only the carrier size");
      }
      auto const n = parse_uint(head[0], content[0].number);
      if (n == 0 || n > 255) {
        throw parse_error(errc::range_error, content[0].number,
                          head[0].column,
                          "carrier size " + std::to_string(n)
                              + " not in [1, 255]");
      }
      if (content.size() - 1 < n) {
        throw parse_error(errc::parse_error, eof_line, 0,
                          "expected " + std::to_string(n) + " rows, found "
                              + std::to_string(content.size() - 1));
      }
      if (content.size() - 1 > n) {
        throw parse_error(errc::parse_error, content[n + 1].number, 0,
                          "expected " + std::to_string(n)
                              + " rows, found extra row");
      }
      std::vector<element> table;
      table.reserve(n * n);
      for (std::size_t r = 1; r <= n; ++r) {
        auto const toks = tokenize(content[r].text);
        if (toks.size() != n) {
          throw parse_error(errc::parse_error, content[r].number,
                            toks.size() > n ? toks[n].column : 0,
                            "row has " + std::to_string(toks.size())
                                + " entries, expected " + std::to_string(n));
        }
        for (auto const& tok : toks) {
          auto const v = parse_uint(tok, content[r].number);
          if (v >= n) {
            throw parse_error(errc::range_error, content[r].number,
                              tok.column,
                              "entry " + std::string(tok.text)
                                  + " outside carrier of size "
                                  + std::to_string(n));
          }
          table.push_back(static_cast<element>(v));
        }
      }
      return FiniteBinaryOp(n, std::move(table));
    }

    inline std::string_view trim(std::string_view s) noexcept {
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace detail

  //! Throws parse_error with code errc::parse_error or errc::range_error.
  [[nodiscard]] inline FiniteBinaryOp parse_cayley(std::string_view text) {
    auto const lines = detail::split_lines(text);
    return detail::parse_cayley_lines(lines, lines.back().number);
  }

  [[nodiscard]] inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw parse_error(errc::parse_error, 0, 0, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  [[nodiscard]] inline FiniteBinaryOp
  parse_cayley_file(std::string const& path) {
    return parse_cayley(read_file(path));
  }

  [[nodiscard]] inline std::string serialize(FiniteBinaryOp const& op) {
    return to_string(op);
  }

  struct Bundle {
    FiniteBinaryOp                diamond;
    FiniteBinaryOp                circ;
    std::optional<FiniteBinaryOp> lambda;
  };

  //! Throws parse_error; also errc::size_mismatch when blocks disagree on n.
  [[nodiscard]] inline Bundle parse_bundle(std::string_view text) {
    auto const                     lines = detail::split_lines(text);
    std::vector<std::vector<detail::Line>> blocks(1);
    std::vector<std::size_t>       block_end;
    for (auto const& l : lines) {
      if (detail::trim(l.text) == "---") {
        block_end.push_back(l.number);
        blocks.emplace_back();
      } else {
        blocks.back().push_back(l);
      }
    }
    block_end.push_back(lines.back().number);
    if (blocks.size() < 2 || blocks.size() > 3) {
      throw parse_error(errc::parse_error, lines.back().number, 0,
                        "bundle needs 2 or 3 blocks separated by '---', found "
                            + std::to_string(blocks.size()));
    }
    Bundle b;
    b.diamond = detail::parse_cayley_lines(blocks[0], block_end[0]);
    b.circ    = detail::parse_cayley_lines(blocks[1], block_end[1]);
    if (blocks.size() == 3) {
      b.lambda = detail::parse_cayley_lines(blocks[2], block_end[2]);
    }
    detail::check_same_size(b.diamond, b.circ);
    if (b.lambda) {
      detail::check_same_size(b.diamond, *b.lambda);
    }
    return b;
  }

  [[nodiscard]] inline Bundle parse_bundle_file(std::string const& path) {
    return parse_bundle(read_file(path));
  }

  [[nodiscard]] inline std::string serialize(Bundle const& b) {
    std::string out = serialize(b.diamond) + "---\n" + serialize(b.circ);
    if (b.lambda) {
      out += "---\n" + serialize(*b.lambda);
    }
    return out;
  }

  [[nodiscard]] inline std::string serialize(PairMap const& r) {
    std::string out = std::to_string(r.size()) + "\n";
    for (element a = 0; a < r.size(); ++a) {
      for (element b = 0; b < r.size(); ++b) {
        auto const [x, y] = r(a, b);
        out += std::to_string(a) + " " + std::to_string(b) + " -> "
               + std::to_string(x) + " " + std::to_string(y) + "\n";
      }
    }
    return out;
  }

  //! Throws parse_error.
  [[nodiscard]] inline PairMap parse_pair_map(std::string_view text) {
    std::vector<detail::Line> content;
    auto const                lines = detail::split_lines(text);
    for (auto const& l : lines) {
      if (!detail::is_ignorable(l.text)) {
        content.push_back(l);
      }
    }
    if (content.empty()) {
      throw parse_error(errc::parse_error, lines.back().number, 0,
                        "missing carrier size");
    }
    auto const head = detail::tokenize(content[0].text);
    if (head.size() != 1) {
      throw parse_error(errc::parse_error, content[0].number, 0,
                        "first line must hold only the carrier size");
    }
    auto const n = detail::parse_uint(head[0], content[0].number);
    if (n == 0 || n > 255) {
      throw parse_error(errc::range_error, content[0].number, head[0].column,
                        "carrier size out of range");
    }
    if (content.size() != n * n + 1) {
      throw parse_error(errc::parse_error, content.back().number, 0,
                        "expected " + std::to_string(n * n) + " pair lines");
    }
    std::vector<Pair> map(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      auto const& l    = content[i + 1];
      auto const  toks = detail::tokenize(l.text);
      if (toks.size() != 5 || toks[2].text != "->") {
        throw parse_error(errc::parse_error, l.number, 0,
                          "expected 'a b -> x y'");
      }
      std::uint64_t v[4];
      std::size_t const idx[4] = {0, 1, 3, 4};
      for (int k = 0; k < 4; ++k) {
        v[k] = detail::parse_uint(toks[idx[k]], l.number);
        if (v[k] >= n) {
          throw parse_error(errc::range_error, l.number, toks[idx[k]].column,
                            "entry outside carrier");
        }
      }
      if (v[0] * n + v[1] != i) {
        throw parse_error(errc::parse_error, l.number, toks[0].column,
                          "pairs must be listed in row-major order");
      }
      map[i] = {static_cast<element>(v[2]), static_cast<element>(v[3])};
    }
    return PairMap(n, std::move(map));
  }

  //! 64-bit FNV-1a digest as 16 hex digits; identifies report inputs.
  [[nodiscard]] inline std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << h;
    return ss.str();
  }

}  // namespace semitruss

#endif  // SEMITRUSS_IO_HPP_
