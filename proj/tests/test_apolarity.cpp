#include <doctest.h>

#include <stdexcept>

#include "waring/apolarity.hpp"
#include "waring/instances.hpp"
#include "waring/parse.hpp"

using namespace waring;

namespace {

Form f(const std::string& text) { return parse_form(text).form; }

}  // namespace

TEST_CASE("catalecticant of x0*x1 in degree 1 is the swap matrix") {
    const Catalecticant c = catalecticant(f("x0*x1"), 1);
    CHECK(c.matrix == MatrixQ::from_rows({{0, 1}, {1, 0}}));
    REQUIRE(c.row_monomials.size() == 2);
    CHECK(c.row_monomials[0] == Monomial({1, 0}));
    CHECK(c.col_monomials[1] == Monomial({0, 1}));
}

TEST_CASE("catalecticant ranks of a sum of coprime cubes") {
    const Form g = f("x0^3 + x1^3");
    CHECK(catalecticant(g, 1).matrix == MatrixQ::from_rows({{3, 0, 0}, {0, 0, 3}}));
    CHECK(catalecticant_rank(g, 1) == 2);
    CHECK(catalecticant_rank(g, 2) == 2);
    CHECK(catalecticant_rank(g, 3) == 1);
    CHECK_THROWS_AS(catalecticant(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(catalecticant(g, 4), std::invalid_argument);
    CHECK_THROWS_AS(catalecticant(Form(2, 3), 1), std::invalid_argument);
}

TEST_CASE("pruned catalecticant rank agrees with the dense matrix") {
    const std::vector<Form> samples = {
        f("x0^3 + x1^3"),
        f("x0*x1^2"),
        f("x0^2*x1 + x1^2*x2"),
        f("x0^4 + x0^2*x1^2 + x2^4"),
        f("x0*x1*x2"),
    };
    for (const Form& g : samples)
        for (int k = 1; k <= g.degree(); ++k)
            CHECK(catalecticant_rank(g, k) == rank(catalecticant(g, k).matrix));
}

TEST_CASE("apolar graded pieces annihilate the form") {
    const Form g = f("x0^3 + x1^3");
    const auto ann2 = apolar_graded_piece(g, 2);
    REQUIRE(ann2.size() == 1);
    CHECK(ann2[0] == f("x0*x1"));
    for (const Form& g2 : {f("x0*x1^2"), f("x0^2*x1 + x2^3"), f("x0*x1*x2")})
        for (int k = 1; k <= g2.degree(); ++k)
            for (const Form& op : apolar_graded_piece(g2, k))
                CHECK(contract(op, g2).is_zero());
}

TEST_CASE("apolar piece dimension complements the catalecticant rank") {
    const Form g = f("x0^2*x1^2 + x0*x1^3");
    for (int k = 1; k <= g.degree(); ++k) {
        const std::size_t dim_k = monomial_space_dim(2, k);
        CHECK(apolar_graded_piece(g, k).size() == dim_k - catalecticant_rank(g, k));
    }
}

TEST_CASE("essential variable counts") {
    CHECK(essential_variable_count(f("x0^3")) == 1);
    CHECK(essential_variable_count(f("(x0+x1)^3")) == 1);
    CHECK(essential_variable_count(f("x0^3 + x1^3")) == 2);
    CHECK(essential_variable_count(f("x0*x1*x2")) == 3);
    CHECK(essential_variable_count(f("(x0+x1)^2 + (x0+x1)*x2")) == 2);
}

TEST_CASE("essential reduction rewrites a perfect power in one variable") {
    const EssentialReduction red = essential_reduction(f("(x0+x1)^3"));
    CHECK(red.reduced.num_vars() == 1);
    CHECK(red.reduced == parse_form("x0^3").form);
    CHECK(red.substitution.rows() == 1);
    CHECK(red.substitution.row(0) == std::vector<Rational>{1, 1});
    CHECK(substitute(red.reduced, red.substitution) == f("(x0+x1)^3"));
}

TEST_CASE("essential reduction round-trips on seeded forms") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const int d = static_cast<int>(rng.uniform(2, 4));
        const Form g = random_form(rng, n, d, 4, 5);
        const EssentialReduction red = essential_reduction(g);
        CHECK(red.reduced.num_vars() == essential_variable_count(g));
        CHECK(substitute(red.reduced, red.substitution) == g);
        CHECK(essential_variable_count(red.reduced) == red.reduced.num_vars());
    }
}
