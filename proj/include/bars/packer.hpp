#pragma once

// Exhaustive search for packings of an integer box by integer bricks.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bars/geometry.hpp"

namespace bars {

struct BrickType {
    std::vector<std::uint64_t> dims;
    // nullopt: unlimited supply.
    std::optional<std::uint64_t> count;
};

struct PackProblem {
    std::vector<std::uint64_t> dims;
    std::vector<BrickType> bricks;
    bool allow_rotations = true;
    std::uint64_t max_cells = std::uint64_t{1} << 20;
};

struct PlacedBrick {
    std::size_t type;
    std::vector<std::uint64_t> offset;
    std::vector<std::uint64_t> extent;
};

struct Packing {
    std::vector<PlacedBrick> bricks;
    std::uint64_t nodes = 0;
};

struct Infeasible {
    bool by_volume_check = false;
    std::uint64_t nodes = 0;
};

struct LimitExceeded {
    std::uint64_t nodes = 0;
};

using PackResult = std::variant<Packing, Infeasible, LimitExceeded>;

// Depth-first search that always fills the lexicographically first empty
// cell. A node is one attempted placement.
PackResult pack(const PackProblem& p, std::uint64_t node_limit);

// The packing as a dissection over the rational symbol space.
Dissection to_dissection(const PackProblem& p, const Packing& packing);

} // namespace bars
