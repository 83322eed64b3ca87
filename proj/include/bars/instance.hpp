#pragma once

// Line-oriented instance files:
//
//   symbol s ~ 1.41421356237309 eps 1e-12
//   length a = 1 + 2*s
//   box P = a x 2 x s
//   group G = 1, s
//   tiling of P
//   piece at (0, 0, 0) size (1, 2, s)
//   ...
//   end
//
// '#' starts a comment.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bars/geometry.hpp"
#include "bars/goodness.hpp"

namespace bars {

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line)
    {
    }

    std::size_t line;
};

struct Tiling {
    std::string box;
    Dissection dissection;
};

struct Instance {
    SpacePtr space;
    std::vector<std::pair<std::string, QNum>> lengths;
    std::vector<std::pair<std::string, BoxSpec>> boxes;
    std::vector<std::pair<std::string, Subgroup>> groups;
    std::optional<Tiling> tiling;

    const QNum* find_length(std::string_view name) const;
    const BoxSpec* find_box(std::string_view name) const;
    const Subgroup* find_group(std::string_view name) const;
};

Instance parse_instance(std::string_view text);

// Parses an expression such as "1/2 + 3*s - a" against the instance's symbols
// and lengths.
QNum parse_expression(const Instance& inst, std::string_view text);

// Canonical text: symbols, lengths, groups, boxes, then the tiling.
std::string emit_instance(const Instance& inst);

// Exact decimal when the denominator divides a power of ten, p/q otherwise.
std::string decimal_string(const Rational& q);

} // namespace bars
