#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "waring/instances.hpp"
#include "waring/parse.hpp"
#include "waring/sac.hpp"

using namespace waring;

namespace {

/// Parses an x-block form and a y-block form and embeds them in the joint
/// ring, mirroring the CLI's sac-check plumbing.
struct Pair {
    Form f, g;
    VariableSplit split;
};

Pair joint(const std::string& f_text, const std::string& g_text) {
    const ParsedExpression pf = parse_form(f_text);
    const ParsedExpression pg = parse_form(g_text);
    REQUIRE(pf.y_vars == 0);
    REQUIRE(pg.x_vars == 0);
    const VariableSplit split{pf.x_vars, pg.y_vars};
    return {embed(pf.form, split.total(), 0), embed(pg.form, split.total(), split.x_vars), split};
}

bool lists(const SacReport& r, SacPath p) {
    return std::find(r.applicable_paths.begin(), r.applicable_paths.end(), p) !=
           r.applicable_paths.end();
}

}  // namespace

TEST_CASE("two disjoint cubes: one-variable path, certified 2") {
    const Pair p = joint("x0^3", "y0^3");
    const SacReport r = classify_and_certify(p.f, p.g, p.split);
    CHECK(r.path == SacPath::one_variable);
    CHECK(r.certified_sum_rank == 2);
    CHECK(r.rank_f.exact == 1);
    CHECK(r.rank_g.exact == 1);
    CHECK(r.sum_lower == 2);
    CHECK(r.sum_upper == 2);
    CHECK(r.all_consistent());
}

TEST_CASE("two rank-3 binary monomials: binary-binary path, certified 6") {
    const Pair p = joint("x0*x1^2", "y0*y1^2");
    const SacReport r = classify_and_certify(p.f, p.g, p.split);
    CHECK(r.path == SacPath::binary_binary);
    CHECK(lists(r, SacPath::coprime_monomials));
    CHECK(r.certified_sum_rank == 6);
    CHECK(r.all_consistent());
}

TEST_CASE("diagonal ternary plus a power: certified 4 with every applicable path listed") {
    const Pair p = joint("x0^2 + x1^2 + x2^2", "y0^2");
    const SacReport r = classify_and_certify(p.f, p.g, p.split);
    // G has one essential variable, so that rule fires first; the
    // essential-rank rule (rank F = 3 = essential count) also applies.
    CHECK(r.path == SacPath::one_variable);
    CHECK(lists(r, SacPath::essential_rank));
    CHECK(r.certified_sum_rank == 4);
    CHECK(r.rank_f.exact == 3);
    CHECK(r.all_consistent());
}

TEST_CASE("coprime monomials in three variables each") {
    const Pair p = joint("x0*x1*x2", "y0*y1*y2");
    const SacReport r = classify_and_certify(p.f, p.g, p.split);
    CHECK(r.path == SacPath::coprime_monomials);
    CHECK(r.certified_sum_rank == 8);  // 4 + 4
    CHECK(r.all_consistent());
}

TEST_CASE("unproved pairs still carry bounds and consistency checks") {
    // Two general ternary cubics: no proved family applies.
    const Pair p = joint("x0^2*x1 + x1^2*x2 + x0*x1*x2", "y0^2*y1 + y1^2*y2 + y0*y1*y2");
    const SacReport r = classify_and_certify(p.f, p.g, p.split);
    CHECK(r.path == SacPath::unproved);
    CHECK_FALSE(r.certified_sum_rank.has_value());
    CHECK(r.sum_lower >= 1);
    CHECK(r.sum_lower <= r.sum_upper);
    CHECK(r.all_consistent());
}

TEST_CASE("classification rejects malformed pairs") {
    const Pair p = joint("x0^3", "y0^3");
    CHECK_THROWS_AS(classify_and_certify(p.f, p.f, p.split), std::invalid_argument);
    CHECK_THROWS_AS(classify_and_certify(Form(2, 3), p.g, p.split), std::invalid_argument);
    const Pair q = joint("x0^2", "y0^3");
    CHECK_THROWS_AS(classify_and_certify(q.f, q.g, q.split), std::invalid_argument);
    // Degree must be at least 2.
    const Pair lin = joint("x0", "y0");
    CHECK_THROWS_AS(classify_and_certify(lin.f, lin.g, lin.split), std::invalid_argument);
}

TEST_CASE("reduce_decomposition splits pure and mixed terms") {
    const Pair p = joint("x0^2 + x1^2", "y0^2");
    const Form total = add(p.f, p.g);
    // x0^2 + x1^2 + y0^2 = x0^2 + x1^2 + y0^2 exactly; build a decomposition
    // with one pure-x, one pure-y and two mixed terms:
    // x1^2 + y0^2 = 1/2 (x1+y0)^2 + 1/2 (x1-y0)^2.
    const Decomposition d(3, 2,
                          {{Rational(1), LinearForm({1, 0, 0})},
                           {Rational(1, 2), LinearForm({0, 1, 1})},
                           {Rational(1, 2), LinearForm({0, 1, -1})}});
    REQUIRE(d.expand() == total);
    const ReducedDecomposition red = reduce_decomposition(p.f, p.g, d, p.split);
    CHECK(red.removed_pure_x == 1);
    CHECK(red.removed_pure_y == 0);
    CHECK(red.mixed.size() == 2);
    CHECK(red.f_prime == embed(parse_form("x1^2").form, 3, 0));  // x0^2 subtracted
    CHECK(red.g_prime == p.g);  // no pure-y terms to remove
    CHECK(add(red.f_prime, red.g_prime) == red.mixed.expand());
}

TEST_CASE("reduce_decomposition handles the all-pure and all-mixed extremes") {
    const Pair p = joint("x0^2", "y0^2");
    const Decomposition pure(2, 2,
                             {{Rational(1), LinearForm({1, 0})},
                              {Rational(1), LinearForm({0, 1})}});
    const ReducedDecomposition red = reduce_decomposition(p.f, p.g, pure, p.split);
    CHECK(red.mixed.size() == 0);
    CHECK(red.f_prime.is_zero());
    CHECK(red.g_prime.is_zero());
    CHECK(red.removed_pure_x == 1);
    CHECK(red.removed_pure_y == 1);

    const Decomposition mixed(2, 2,
                              {{Rational(1, 2), LinearForm({1, 1})},
                               {Rational(1, 2), LinearForm({1, -1})}});
    REQUIRE(mixed.expand() == add(p.f, p.g));
    const ReducedDecomposition red2 = reduce_decomposition(p.f, p.g, mixed, p.split);
    CHECK(red2.mixed.size() == 2);
    CHECK(red2.f_prime == p.f);
    CHECK(red2.g_prime == p.g);
}

TEST_CASE("reduce_decomposition rejects a decomposition of the wrong form") {
    const Pair p = joint("x0^2", "y0^2");
    const Decomposition wrong(2, 2, {{Rational(1), LinearForm({1, 0})}});
    CHECK_THROWS_AS(reduce_decomposition(p.f, p.g, wrong, p.split), std::invalid_argument);
}

TEST_CASE("project_decomposition zeroes the other block") {
    const VariableSplit split{1, 1};
    const Decomposition d(2, 2, {{Rational(1), LinearForm({1, 1})}});
    const Decomposition px = project_decomposition(d, Block::x, split);
    REQUIRE(px.size() == 1);
    CHECK(px.terms()[0].linear == LinearForm({1, 0}));
    CHECK(px.expand() == embed(parse_form("x0^2").form, 2, 0));

    // A pure-y term projects to nothing on the x side.
    const Decomposition dy(2, 2, {{Rational(1), LinearForm({0, 1})}});
    CHECK(project_decomposition(dy, Block::x, split).size() == 0);
}

TEST_CASE("projection merges terms that become proportional") {
    const VariableSplit split{1, 1};
    // (x0+y0)^2 and (x0-y0)^2 both project to x0^2.
    const Decomposition d(2, 2,
                          {{Rational(1), LinearForm({1, 1})},
                           {Rational(1), LinearForm({1, -1})}});
    const Decomposition px = project_decomposition(d, Block::x, split);
    REQUIRE(px.size() == 1);
    CHECK(px.terms()[0].coeff == Rational(2));

    // The projection of any decomposition of F + G expands to F.
    const Pair p = joint("x0^2", "y0^2");
    const Decomposition mixed(2, 2,
                              {{Rational(1, 2), LinearForm({1, 1})},
                               {Rational(1, 2), LinearForm({1, -1})}});
    CHECK(project_decomposition(mixed, Block::x, p.split).expand() == p.f);
    CHECK(project_decomposition(mixed, Block::y, p.split).expand() == p.g);
}

TEST_CASE("random instances certify their target ranks deterministically") {
    const SacInstance a = random_instance(5, 3, 2, 77);
    const SacInstance b = random_instance(5, 3, 2, 77);
    CHECK(a.f == b.f);
    CHECK(a.g == b.g);
    CHECK(a.witness_f == b.witness_f);
    CHECK(a.rank_f == 3);
    CHECK(a.rank_g == 2);
    CHECK(a.witness_f.expand() == a.f);
    CHECK(a.witness_g.expand() == a.g);
    const SacReport r = classify_and_certify(a.f, a.g, a.split);
    CHECK(r.certified_sum_rank == 5);
    CHECK(r.all_consistent());
}

TEST_CASE("random instances cover the high-rank monomial family") {
    const SacInstance inst = random_instance(5, 5, 1, 9);
    CHECK(inst.rank_f == 5);
    const SacReport r = classify_and_certify(inst.f, inst.g, inst.split);
    CHECK(r.certified_sum_rank == 6);
    CHECK(r.rank_f.exact == 5);
}

TEST_CASE("random_instance rejects unachievable targets") {
    CHECK_THROWS_AS(random_instance(3, 4, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_instance(3, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("add2 configuration replay: both fixture cases") {
    std::vector<ProjPoint> zf_pts, zg_pts;
    for (long t = 0; t <= 3; ++t) zf_pts.push_back(ProjPoint({1, Rational(t), 0, 0}));
    for (long t = 0; t <= 2; ++t) zg_pts.push_back(ProjPoint({0, 0, 1, Rational(t)}));
    const PointSet zf(3, zf_pts), zg(3, zg_pts);

    // Case 1: no four of ZH collinear.
    const PointSet zh1(3, {ProjPoint({1, 1, 1, 1}), ProjPoint({1, 2, 3, 4}),
                           ProjPoint({1, -1, 2, 1}), ProjPoint({1, 3, -1, 2}),
                           ProjPoint({1, 1, 4, -1})});
    const LemmaVerdict v1 = check_add2_configuration(zf, zg, zh1, 4);
    CHECK(v1.hypotheses_met);
    CHECK(v1.conclusion_holds == std::optional<bool>(true));
    CHECK(v1.data.at("case") == "1");
    CHECK(v1.data.at("h1_Z_d") == "0");

    // Case 2: exactly d = 4 points of ZH on a line through (1,0,0,0).
    const PointSet zh2(3, {ProjPoint({1, 1, 1, 0}), ProjPoint({1, 2, 2, 0}),
                           ProjPoint({1, 3, 3, 0}), ProjPoint({1, 4, 4, 0}),
                           ProjPoint({1, 1, 2, 1}), ProjPoint({1, 0, 1, 3})});
    const LemmaVerdict v2 = check_add2_configuration(zf, zg, zh2, 4);
    CHECK(v2.hypotheses_met);
    CHECK(v2.conclusion_holds == std::optional<bool>(true));
    CHECK(v2.data.at("case") == "2");
    CHECK(v2.data.at("h1_Z_d") == "0");

    // Planar ZH: hypotheses not met.
    const PointSet flat(3, {ProjPoint({1, 1, 1, 0}), ProjPoint({1, 2, 1, 0}),
                            ProjPoint({1, 1, 2, 0}), ProjPoint({1, 3, 2, 0})});
    const LemmaVerdict v3 = check_add2_configuration(zf, zg, flat, 4);
    CHECK_FALSE(v3.hypotheses_met);
    CHECK_FALSE(v3.conclusion_holds.has_value());
}

TEST_CASE("seeded add2 configurations meet the hypotheses and conclude") {
    int case1 = 0, case2 = 0;
    for (std::uint64_t i = 0; i < 20; ++i) {
        const Add2Config cfg = random_add2_config(mix_seed(5, i));
        const LemmaVerdict v = check_add2_configuration(cfg.zf, cfg.zg, cfg.zh, cfg.d);
        CHECK(v.hypotheses_met);
        CHECK(v.conclusion_holds == std::optional<bool>(true));
        if (v.data.at("case") == "1") ++case1;
        if (v.data.at("case") == "2") ++case2;
    }
    CHECK(case1 > 0);
    CHECK(case2 > 0);
}
