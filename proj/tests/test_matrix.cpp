#include <doctest.h>

#include <stdexcept>

#include "waring/matrix.hpp"

using namespace waring;

namespace {

MatrixQ rows(const std::vector<std::vector<Rational>>& r) { return MatrixQ::from_rows(r); }

bool in_kernel(const MatrixQ& m, const std::vector<Rational>& v) {
    for (const Rational& c : m.apply(v))
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("rref of the identity") {
    const MatrixQ id = MatrixQ::identity(3);
    const RrefResult r = rref(id);
    CHECK(r.rref == id);
    CHECK(r.rank == 3);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref of the zero matrix") {
    const MatrixQ z(2, 2);
    const RrefResult r = rref(z);
    CHECK(r.rank == 0);
    CHECK(r.pivot_cols.empty());
    CHECK(r.rref == z);
}

TEST_CASE("rank-one matrix and its kernel") {
    const MatrixQ m = rows({{1, 2}, {2, 4}});
    CHECK(rank(m) == 1);
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Rational>{-2, 1});
    CHECK(in_kernel(m, k[0]));
}

TEST_CASE("rref pivots normalize to one with zeros above and below") {
    const MatrixQ m = rows({{0, 2, 4}, {1, 1, 1}});
    const RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(r.rref == rows({{1, 0, -1}, {0, 1, 2}}));
}

TEST_CASE("exact fractions survive elimination") {
    const MatrixQ m = rows({{Rational(1, 3), Rational(1, 7)}, {Rational(1, 2), Rational(1, 5)}});
    CHECK(rank(m) == 2);
    const MatrixQ inv = inverse(m);
    CHECK(inv.multiply(m) == MatrixQ::identity(2));
    CHECK(m.multiply(inv) == MatrixQ::identity(2));
}

TEST_CASE("inverse rejects singular and non-square input") {
    CHECK_THROWS_AS(inverse(rows({{1, 2}, {2, 4}})), std::invalid_argument);
    CHECK_THROWS_AS(inverse(MatrixQ(2, 3)), std::invalid_argument);
}

TEST_CASE("solve finds a particular solution or reports none") {
    const MatrixQ m = rows({{1, 1}, {0, 1}});
    const auto s = solve(m, {3, 1});
    REQUIRE(s.has_value());
    CHECK(*s == std::vector<Rational>{2, 1});

    // Inconsistent system.
    const MatrixQ bad = rows({{1, 1}, {1, 1}});
    CHECK_FALSE(solve(bad, {0, 1}).has_value());

    // Underdetermined: free variables default to zero.
    const MatrixQ wide = rows({{1, 2, 3}});
    const auto u = solve(wide, {6});
    REQUIRE(u.has_value());
    CHECK(wide.apply(*u) == std::vector<Rational>{6});
}

TEST_CASE("rank-nullity and kernel membership on assorted matrices") {
    const std::vector<MatrixQ> samples = {
        rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}),      // rank 2
        rows({{1, 0, 0, 2}, {0, 0, 1, 1}}),           // rank 2, 4 cols
        rows({{2}}),                                  // rank 1
        MatrixQ(3, 4),                                // rank 0
        rows({{1, 1}, {1, -1}, {2, 0}}),              // rank 2, no kernel
    };
    for (const MatrixQ& m : samples) {
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == m.cols());
        for (const auto& v : k) CHECK(in_kernel(m, v));
    }
}

TEST_CASE("transpose, multiply and apply agree") {
    const MatrixQ a = rows({{1, 2}, {3, 4}, {5, 6}});
    const MatrixQ at = a.transpose();
    CHECK(at.rows() == 2);
    CHECK(at.cols() == 3);
    CHECK(at.at(0, 2) == Rational(5));
    const MatrixQ prod = at.multiply(a);
    CHECK(prod == rows({{35, 44}, {44, 56}}));
    CHECK(a.apply({1, -1}) == std::vector<Rational>{-1, -1, -1});
}
