#include <doctest.h>

#include "bars/packer.hpp"
#include "support.hpp"

using namespace bars;
using namespace testing;

namespace {

QNum rq(Rational q)
{
    return QNum::rational(SymbolSpace::rational(), q);
}

BoxSpec rbox(std::vector<Rational> sides)
{
    std::vector<QNum> s;
    for (auto& x : sides)
        s.push_back(rq(x));
    return BoxSpec(s);
}

} // namespace

TEST_SUITE("goodness") {

TEST_CASE("is_good_box examples")
{
    Subgroup four{{rq(4)}};
    auto a = is_good_box(rbox({1, 2, 4}), four, 1);
    CHECK(a.good);
    CHECK(a.directions == std::vector<std::size_t>{2});
    CHECK_FALSE(is_good_box(rbox({6, 6, 6}), four, 1).good);

    auto sp = sqrt_space(1);
    QNum s1 = QNum::symbol(sp, 0);
    auto b = is_good_box(BoxSpec({s1, s1 * Rational(2), QNum::rational(sp, 1)}), Subgroup{{s1}}, 2);
    CHECK(b.good);
    CHECK(b.directions == std::vector<std::size_t>{0, 1});
    CHECK_THROWS(is_good_box(rbox({1, 2}), four, 3));
}

TEST_CASE("check_goodness_theorem examples")
{
    auto squares = dissect_into_k_bars(rbox({3, 2}), 1).dissection;
    auto r = check_goodness_theorem(squares, Subgroup{{rq(1)}}, 1);
    CHECK(r.status == GoodnessStatus::Consistent);
    CHECK(r.whole_directions == std::vector<std::size_t>{0, 1});

    Dissection broken = squares;
    broken.pieces.push_back(squares.pieces.front());
    CHECK_THROWS_AS(check_goodness_theorem(broken, Subgroup{{rq(1)}}, 1), InvalidDissection);

    auto halves = grid_dissection(rbox({1, 1}), {{rq(Rational(1, 2)), rq(Rational(1, 2))}, {rq(1)}});
    CHECK(check_goodness_theorem(halves, Subgroup{{rq(1)}}, 2).status == GoodnessStatus::NotAllPiecesGood);
}

TEST_CASE("randomized good-piece dissections are consistent")
{
    Rng rng(97);
    auto sp = sqrt_space(2);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::min<std::size_t>(n, 3))));
        std::vector<QNum> gens = random_independent(rng, sp, static_cast<std::size_t>(uniform(rng, 1, 2)));
        std::vector<GoodSide> sides(n);
        std::vector<std::size_t> axes(n);
        for (std::size_t a = 0; a < n; ++a)
            axes[a] = a;
        std::shuffle(axes.begin(), axes.end(), rng);
        for (std::size_t a = 0; a < n; ++a) {
            if (a < k || coin(rng, 0.3)) {
                std::vector<long> c(gens.size());
                do
                    for (auto& x : c)
                        x = uniform(rng, 0, 3);
                while (std::all_of(c.begin(), c.end(), [](long x) { return x == 0; }));
                sides[axes[a]] = {from_coeffs(gens, c), c};
            } else {
                sides[axes[a]] = {random_positive(rng, sp), {}};
            }
        }
        Dissection d = random_good_dissection(rng, gens, sides, static_cast<std::size_t>(uniform(rng, 0, 12)));
        Subgroup g{gens};
        auto r = check_goodness_theorem(d, g, k);
        CHECK(r.status == GoodnessStatus::Consistent);
    }
}

TEST_CASE("goodness certificate examples")
{
    auto c = goodness_impossibility_certificate(PlacedBox::at_origin(rbox({6, 6, 6})), Subgroup{{rq(4)}}, 1);
    REQUIRE(c);
    CHECK(c->good_directions.empty());
    CHECK(c->exponent == 0);
    CHECK(c->signed_sum == SymPoly::constant(SymbolSpace::rational(), 1));

    auto sp = sqrt_space(1);
    QNum one = QNum::rational(sp, 1), s1 = QNum::symbol(sp, 0);
    auto d = goodness_impossibility_certificate(PlacedBox::at_origin(BoxSpec({one, s1})), Subgroup{{one}}, 2);
    REQUIRE(d);
    CHECK(d->good_directions == std::vector<std::size_t>{0});
    CHECK(d->exponent == 1);
    CHECK(d->signed_sum == SymPoly::constant(sp, 1));
    CHECK(d->sign_witness.lo() > 0);

    CHECK_FALSE(goodness_impossibility_certificate(PlacedBox::at_origin(rbox({1, 2, 4})), Subgroup{{rq(4)}}, 1));
}

TEST_CASE("signed sum equals the finite difference constant term")
{
    Rng rng(101);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
        std::size_t m = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(k) - 1));
        Subgroup g{{rq(1)}};
        std::vector<Rational> sides(n);
        std::vector<Rational> good;
        for (std::size_t a = 0; a < n; ++a) {
            if (a < m) {
                sides[a] = uniform(rng, 1, 5);
                good.push_back(sides[a]);
            } else {
                sides[a] = Rational(2 * uniform(rng, 0, 4) + 1, 2);
            }
        }
        std::vector<QNum> off;
        for (std::size_t a = 0; a < n; ++a)
            off.push_back(rq(small_rational(rng, 5, 3)));
        PlacedBox b(off, rbox(sides));
        auto c = goodness_impossibility_certificate(b, g, k);
        REQUIRE(c);
        UniPoly fd = finite_difference_power(static_cast<unsigned>(k - 1), good);
        CHECK(c->signed_sum == SymPoly::constant(SymbolSpace::rational(), fd.eval(1)));
        CHECK(c->signed_sum.constant_value().value_or(0) > 0);
        CHECK(c->sign_witness.lo() > 0);
    }
}

TEST_CASE("certificate form vanishes on good boxes and not on the certified box")
{
    Rng rng(103);
    auto sp = sqrt_space(2);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
        std::vector<QNum> gens = random_independent(rng, sp, 1);
        Subgroup g{gens};
        std::vector<QNum> sides;
        for (std::size_t a = 0; a < n; ++a)
            sides.push_back(a + 1 < k ? gens[0] * Rational(uniform(rng, 1, 3)) : random_positive(rng, sp) + gens[0] / 3);
        BoxSpec box(sides);
        auto c = goodness_impossibility_certificate(PlacedBox::at_origin(box), g, k);
        if (!c)
            continue;
        CHECK_FALSE(eval_additive(c->form, PlacedBox::at_origin(box)).is_zero());
        for (int i = 0; i < 20; ++i) {
            std::vector<QNum> ps;
            std::vector<std::size_t> axes(n);
            for (std::size_t a = 0; a < n; ++a)
                axes[a] = a;
            std::shuffle(axes.begin(), axes.end(), rng);
            std::vector<QNum> piece(n, QNum::zero(sp));
            for (std::size_t a = 0; a < n; ++a)
                piece[axes[a]] = a < k ? gens[0] * Rational(uniform(rng, 1, 3)) : random_positive(rng, sp);
            std::vector<QNum> off;
            for (std::size_t a = 0; a < n; ++a)
                off.push_back(gens[0] * Rational(uniform(rng, -2, 2)) +
                              (coin(rng) ? QNum::zero(sp) : random_positive(rng, sp)));
            CHECK(eval_additive(c->form, PlacedBox(off, BoxSpec(piece))).is_zero());
        }
    }
}

TEST_CASE("prove_unpackable examples")
{
    Subgroup four{{rq(4)}};
    auto r = prove_unpackable(rbox({6, 6, 6}), {rbox({1, 2, 4})}, four, 1);
    REQUIRE(std::holds_alternative<UnpackabilityProof>(r));
    CHECK(std::get<UnpackabilityProof>(r).orientations.size() == 6);

    auto inc = prove_unpackable(rbox({4, 4, 4}), {rbox({1, 2, 4})}, four, 1);
    CHECK(std::holds_alternative<Inconclusive>(inc));
    PackProblem p{{4, 4, 4}, {BrickType{{1, 2, 4}, {}}}, true};
    CHECK(std::holds_alternative<Packing>(pack(p, 1000000)));

    auto ex2 = prove_unpackable(rbox({Rational(5, 2), Rational(5, 3)}),
                                {rbox({Rational(1, 2), 1}), rbox({1, Rational(1, 3)})}, Subgroup{{rq(1)}}, 1);
    REQUIRE(std::holds_alternative<UnpackabilityProof>(ex2));
    CHECK(std::get<UnpackabilityProof>(ex2).orientations.size() == 4);

    auto bad_brick = prove_unpackable(rbox({6, 6}), {rbox({1, 3})}, four, 1);
    CHECK(std::holds_alternative<Inconclusive>(bad_brick));
}

TEST_CASE("scale_instance examples")
{
    auto s = scale_instance({rbox({2003, 2003}), rbox({2, 1}), rbox({1, 3})}, {2, 3});
    CHECK(s[0] == rbox({Rational(2003, 2), Rational(2003, 3)}));
    CHECK(scale_instance({rbox({2, 1})}, {2, 1})[0] == rbox({1, 1}));
    CHECK(s[2] == rbox({Rational(1, 2), 1}));
    CHECK_THROWS(scale_instance({rbox({2, 1})}, {2}));
}

TEST_CASE("agreement with the packer on small integer instances")
{
    Rng rng(107);
    int proofs = 0;
    for (int t = 0; t < 300; ++t) {
        std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 3));
        long g = uniform(rng, 2, 4);
        std::vector<std::uint64_t> dims(n), brick(n);
        std::vector<Rational> dq(n), bq(n);
        for (std::size_t a = 0; a < n; ++a) {
            dims[a] = static_cast<std::uint64_t>(uniform(rng, 1, n == 2 ? 9 : 5));
            brick[a] = static_cast<std::uint64_t>(uniform(rng, 1, 4));
            dq[a] = static_cast<long>(dims[a]);
            bq[a] = static_cast<long>(brick[a]);
        }
        auto r = prove_unpackable(rbox(dq), {rbox(bq)}, Subgroup{{rq(g)}}, 1);
        if (!std::holds_alternative<UnpackabilityProof>(r))
            continue;
        ++proofs;
        PackProblem p{dims, {BrickType{brick, {}}}, true};
        CHECK_FALSE(std::holds_alternative<Packing>(pack(p, 5'000'000)));
    }
    CHECK(proofs > 0);
}

}
