#include <doctest.h>

#include <stdexcept>

#include "waring/instances.hpp"
#include "waring/parse.hpp"
#include "waring/rank.hpp"

using namespace waring;

namespace {

Form f(const std::string& text) { return parse_form(text).form; }

}  // namespace

TEST_CASE("pure powers have rank one, in any presentation") {
    for (const char* text : {"x0^4", "(x0+x1)^4", "(2*x0-3*x1)^5"}) {
        const RankCertificate c = binary_rank(f(text));
        CHECK(c.exact == 1);
        REQUIRE(c.witness.has_value());
        CHECK(c.witness->size() == 1);
        CHECK(c.witness->expand() == f(text));
    }
}

TEST_CASE("x0*x1^(d-1) has rank d") {
    for (int d = 2; d <= 8; ++d) {
        const Form g = multiply(embed(f("x0"), 2, 0), power(LinearForm({0, 1}), d - 1));
        const RankCertificate c = binary_rank(g);
        CHECK(c.exact == static_cast<std::size_t>(d));
    }
}

TEST_CASE("sum of two cubes splits into two powers") {
    const RankCertificate c = binary_rank(f("x0^3 + x1^3"));
    CHECK(c.exact == 2);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->size() == 2);
    CHECK(c.witness->expand() == f("x0^3 + x1^3"));
    REQUIRE(c.apolar_pair.has_value());
    CHECK(contract(c.apolar_pair->first, f("x0^3 + x1^3")).is_zero());
    CHECK(contract(c.apolar_pair->second, f("x0^3 + x1^3")).is_zero());
}

TEST_CASE("tie case at the middle degree still certifies") {
    // For x0*x1 both apolar generators live in degree 2 and the rank is 2.
    const RankCertificate c = binary_rank(f("x0*x1"));
    CHECK(c.exact == 2);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->expand() == f("x0*x1"));
}

TEST_CASE("irrational split: exact rank without a rational witness") {
    // x0^2*x1 + x0*x1^2 has annihilator y0^2 - y0*y1 + y1^2 (squarefree, no
    // rational roots): rank 2 but no witness over the rationals.
    const RankCertificate c = binary_rank(f("x0^2*x1 + x0*x1^2"));
    CHECK(c.exact == 2);
    CHECK_FALSE(c.witness.has_value());
}

TEST_CASE("binary rank rejects wide inputs and the zero form") {
    CHECK_THROWS_AS(binary_rank(f("x0*x1*x2")), std::invalid_argument);
    CHECK_THROWS_AS(binary_rank(Form(2, 3)), std::invalid_argument);
}

TEST_CASE("squarefree detection on binary forms") {
    CHECK(is_squarefree_binary(f("x0*x1")));
    CHECK(is_squarefree_binary(f("x0^2 - x1^2")));
    CHECK(is_squarefree_binary(f("x0^2 + x1^2")));  // no rational roots, still squarefree
    CHECK_FALSE(is_squarefree_binary(f("x0^2*x1")));
    CHECK_FALSE(is_squarefree_binary(f("x0*x1^2")));
    CHECK_FALSE(is_squarefree_binary(f("x0^2 + 2*x0*x1 + x1^2")));
    CHECK(is_squarefree_binary(f("x1")));
    CHECK_FALSE(is_squarefree_binary(f("x1^2")));
}

TEST_CASE("monomial rank formula") {
    CHECK(monomial_rank({1, 1}) == 2);
    CHECK(monomial_rank({1, 2}) == 3);
    CHECK(monomial_rank({2, 2}) == 3);
    CHECK(monomial_rank({1, 1, 1}) == 4);
    CHECK(monomial_rank({1, 2, 3}) == 12);
    CHECK(monomial_rank({2, 1, 3}) == 12);  // minimum factored out wherever it sits
    CHECK(monomial_rank({5}) == 1);
    CHECK_THROWS_AS(monomial_rank({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(monomial_rank({}), std::invalid_argument);
}

TEST_CASE("monomial certificate ignores unused variables") {
    const RankCertificate c = monomial_rank_certificate(f("x0*x1*x2^2"));
    CHECK(c.exact == 6);
    CHECK(c.method == RankMethod::monomial);
}

TEST_CASE("catalecticant lower bound") {
    CHECK(catalecticant_lower_bound(f("x0^3 + x1^3")) == 2);
    CHECK(catalecticant_lower_bound(f("x0*x1*x2")) == 3);
    CHECK(catalecticant_lower_bound(f("x0*x1^3")) == 2);
    CHECK(catalecticant_lower_bound(f("x0 + x1")) == 1);
}

TEST_CASE("certify_rank dispatches to the right method") {
    // Two essential variables: Sylvester, matching the monomial formula.
    const RankCertificate bin = certify_rank(f("x0*x1^2"));
    CHECK(bin.method == RankMethod::sylvester);
    CHECK(bin.exact == 3);

    // Monomial in three variables.
    const RankCertificate mon = certify_rank(f("x0*x1*x2"));
    CHECK(mon.method == RankMethod::monomial);
    CHECK(mon.exact == 4);

    // Diagonal ternary form: exact rank equals the essential count.
    const RankCertificate diag = certify_rank(f("x0^2 + x1^2 + x2^2"));
    CHECK(diag.exact == 3);
    REQUIRE(diag.witness.has_value());
    CHECK(diag.witness->expand() == f("x0^2 + x1^2 + x2^2"));

    // Two essential variables hiding in three: routed through Sylvester.
    const Form hidden = add(power(LinearForm({1, 1, 0}), 3), f("x2^3"));
    const RankCertificate hid = certify_rank(hidden);
    CHECK(hid.exact == 2);
    REQUIRE(hid.witness.has_value());
    CHECK(hid.witness->expand() == hidden);

    // Diagonal with an unused variable: the reduction strips it first.
    const Form sparse_diag = f("x0^2 + x2^2 + x3^2");
    const RankCertificate sd = certify_rank(sparse_diag);
    CHECK(sd.exact == 3);
    REQUIRE(sd.witness.has_value());
    CHECK(sd.witness->expand() == sparse_diag);

    // General ternary cubic: bounds only.
    const RankCertificate gen = certify_rank(f("x0^2*x1 + x1^2*x2 + x2^3 + x0*x1*x2"));
    CHECK(gen.lower >= 1);
    CHECK(gen.lower <= gen.upper);
    if (gen.exact) CHECK((gen.lower == *gen.exact && gen.upper == *gen.exact));
}

TEST_CASE("witnesses expand to their form whenever present") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = static_cast<int>(rng.uniform(2, 6));
        const Form g = random_binary_form(rng, d);
        const RankCertificate c = binary_rank(g);
        REQUIRE(c.exact.has_value());
        CHECK(*c.exact >= 1);
        CHECK(*c.exact <= static_cast<std::size_t>(d));
        if (c.witness) {
            CHECK(c.witness->expand() == g);
            CHECK(c.witness->size() == *c.exact);
        }
        if (c.apolar_pair) {
            CHECK(contract(c.apolar_pair->first, g).is_zero());
            CHECK(contract(c.apolar_pair->second, g).is_zero());
        }
    }
}

TEST_CASE("decomposition validation") {
    CHECK_THROWS_AS(Decomposition(2, 2, {{Rational(0), LinearForm({1, 0})}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Decomposition(2, 2, {{Rational(1), LinearForm({0, 0})}}),
                    std::invalid_argument);
    // Proportional directions are rejected even with different scalings.
    CHECK_THROWS_AS(Decomposition(2, 2,
                                  {{Rational(1), LinearForm({1, 1})},
                                   {Rational(1), LinearForm({2, 2})}}),
                    std::invalid_argument);
}

TEST_CASE("powers_dependence finds the expected relation") {
    // Four squares of binary forms are always dependent (dim S_2 = 3).
    const std::vector<LinearForm> pts = {LinearForm({1, 0}), LinearForm({0, 1}),
                                         LinearForm({1, 1}), LinearForm({1, -1})};
    const auto rel = powers_dependence(pts, 2);
    REQUIRE(rel.has_value());
    Form acc(2, 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        acc = add(acc, scale(power(pts[i], 2), (*rel)[i]));
    CHECK(acc.is_zero());

    // Three independent squares have no relation.
    const std::vector<LinearForm> indep = {LinearForm({1, 0}), LinearForm({0, 1}),
                                           LinearForm({1, 1})};
    CHECK_FALSE(powers_dependence(indep, 2).has_value());
}

TEST_CASE("fold_collinear compresses dependent collinear powers") {
    // Four binary directions are collinear as projective points; degree-2
    // powers of four points satisfy a relation, so folding must shrink.
    const Decomposition four(2, 2,
                             {{Rational(1), LinearForm({1, 0})},
                              {Rational(1), LinearForm({0, 1})},
                              {Rational(1), LinearForm({1, 1})},
                              {Rational(1), LinearForm({1, -1})}});
    const Decomposition folded = fold_collinear(four);
    CHECK(folded.size() < four.size());
    CHECK(folded.expand() == four.expand());

    // An independent triple stays put.
    const Decomposition three(2, 2,
                              {{Rational(1), LinearForm({1, 0})},
                               {Rational(1), LinearForm({0, 1})},
                               {Rational(1), LinearForm({1, 1})}});
    CHECK(fold_collinear(three).size() == 3);
    CHECK(fold_collinear(three).expand() == three.expand());
}

TEST_CASE("fold_collinear leaves genuinely skew configurations alone") {
    // Two disjoint-variable pairs in four variables: no three terms collinear.
    const Decomposition d(4, 3,
                          {{Rational(1), LinearForm({1, 0, 0, 0})},
                           {Rational(1), LinearForm({0, 1, 0, 0})},
                           {Rational(1), LinearForm({0, 0, 1, 0})},
                           {Rational(1), LinearForm({0, 0, 0, 1})}});
    CHECK(fold_collinear(d).size() == 4);
}
