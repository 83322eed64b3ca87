#pragma once

// Good boxes relative to a finitely generated subgroup G of R: a box is good
// when at least K of its sides lie in G. Dissections into good boxes only
// exist for good boxes.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bars/certify.hpp"
#include "bars/geometry.hpp"

namespace bars {

struct Subgroup {
    std::vector<QNum> generators;

    bool contains(const QNum& x) const;
    std::string to_string() const;
};

struct GoodnessInfo {
    bool good = false;
    // Axes whose side lies in G.
    std::vector<std::size_t> directions;
};

GoodnessInfo is_good_box(const BoxSpec& b, const Subgroup& g, std::size_t k_dirs);

enum class GoodnessStatus {
    // Every piece is good and so is the whole.
    Consistent,
    // Some piece is bad; nothing to check.
    NotAllPiecesGood,
    // Every piece is good but the whole is not. Cannot happen for a valid
    // tiling; signals a bug upstream.
    TheoremViolation,
};

struct GoodnessCheck {
    GoodnessStatus status;
    std::vector<std::size_t> whole_directions;
    std::vector<std::size_t> bad_pieces;
};

// Throws InvalidDissection if the dissection does not tile the whole box.
GoodnessCheck check_goodness_theorem(const Dissection& d, const Subgroup& g, std::size_t k_dirs);

struct GoodnessCertificate {
    std::vector<QNum> box;
    std::vector<QNum> base_vertex;
    std::vector<std::size_t> good_directions;
    unsigned exponent = 0;
    SymPoly signed_sum;
    QInterval sign_witness;
    Rational alpha{1};
    VertexForm form;
    std::string alpha_coset;
};

// nullopt when the box is good.
std::optional<GoodnessCertificate> goodness_impossibility_certificate(const PlacedBox& b, const Subgroup& g,
                                                                      std::size_t k_dirs);

std::string certificate_text(const GoodnessCertificate& c);

struct OrientationGoodness {
    std::size_t brick;
    std::vector<std::size_t> permutation;
    std::vector<std::size_t> directions;
};

struct UnpackabilityProof {
    std::vector<OrientationGoodness> orientations;
    GoodnessCertificate box_certificate;
};

struct Inconclusive {
    std::string reason;
};

std::variant<UnpackabilityProof, Inconclusive> prove_unpackable(const BoxSpec& box, const std::vector<BoxSpec>& bricks,
                                                                const Subgroup& g, std::size_t k_dirs);

// Divides side i of every box by factors[i].
std::vector<BoxSpec> scale_instance(const std::vector<BoxSpec>& boxes, const std::vector<Rational>& factors);

} // namespace bars
