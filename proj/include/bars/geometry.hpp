#pragma once

// Axis-aligned boxes, dissections, and the exact tiling verifier.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bars/exactnum.hpp"

namespace bars {

// Side lengths of an axis-aligned box, one per axis. Every side is positive.
class BoxSpec {
public:
    explicit BoxSpec(std::vector<QNum> sides);

    std::size_t dimension() const { return sides_.size(); }
    const QNum& side(std::size_t axis) const { return sides_.at(axis); }
    const std::vector<QNum>& sides() const { return sides_; }
    const SpacePtr& space() const { return sides_.front().space(); }

    SymPoly volume() const;
    std::string to_string() const;

    friend bool operator==(const BoxSpec& a, const BoxSpec& b) { return a.sides_ == b.sides_; }

private:
    std::vector<QNum> sides_;
};

struct PlacedBox {
    PlacedBox(std::vector<QNum> offset, BoxSpec spec);
    static PlacedBox at_origin(BoxSpec spec);

    std::size_t dimension() const { return spec.dimension(); }
    const QNum& lower(std::size_t axis) const { return offset.at(axis); }
    QNum upper(std::size_t axis) const { return offset.at(axis) + spec.side(axis); }

    std::vector<QNum> offset;
    BoxSpec spec;
};

struct Dissection {
    PlacedBox whole;
    std::vector<PlacedBox> pieces;
};

enum class ViolationKind { Gap, Overlap, OutOfBounds };

struct Violation {
    ViolationKind kind;
    // Refinement-grid cell index per axis (empty for OutOfBounds).
    std::vector<std::size_t> cell;
    // Number of pieces covering the cell.
    std::size_t count = 0;
    std::vector<std::size_t> pieces;

    std::string describe() const;
};

struct TilingVerdict {
    std::optional<Violation> violation;
    // Cells of the refinement grid inside the whole box.
    std::size_t cells = 0;

    bool valid() const { return !violation.has_value(); }
};

struct TilingOptions {
    std::size_t max_cells = std::size_t{1} << 22;
};

// Refines the whole box by every piece bound on every axis and checks that
// each cell is covered by exactly one piece. Cells are half-open, so pieces
// touching on a face do not overlap.
TilingVerdict verify_tiling(const Dissection& d, const TilingOptions& options = {});

std::size_t distinct_side_count(const BoxSpec& b);
bool is_k_bar(const BoxSpec& b, std::size_t k);

} // namespace bars
