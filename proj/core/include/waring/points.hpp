#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "waring/form.hpp"
#include "waring/matrix.hpp"

namespace waring {

/// Point of projective space P^N with exact rational coordinates, stored in
/// the normal form where the first nonzero coordinate is 1.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Rational> coords);

    std::size_t ambient_dim() const { return coords_.size() - 1; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool operator==(const ProjPoint&) const = default;
    bool operator<(const ProjPoint& other) const { return coords_ < other.coords_; }

private:
    std::vector<Rational> coords_;
};

/// Finite subset of P^N: normalized, deduplicated, sorted.
class PointSet {
public:
    explicit PointSet(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    PointSet(std::size_t ambient_dim, std::vector<ProjPoint> points);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<ProjPoint>& points() const { return points_; }

    bool contains(const ProjPoint& p) const;
    PointSet union_with(const PointSet& other) const;
    PointSet set_minus(const PointSet& other) const;

    /// Matrix whose rows are the point coordinates.
    MatrixQ coordinate_matrix() const;

    bool operator==(const PointSet&) const = default;

private:
    std::size_t ambient_;
    std::vector<ProjPoint> points_;
};

/// Hilbert function h_Z(t): the rank of the evaluation map from degree-t
/// forms on P^N to functions on Z. Throws on t < 0.
std::size_t hilbert_function(const PointSet& z, int t);

/// First difference h_Z(t) - h_Z(t-1), with h_Z(-1) = 0.
long first_difference(const PointSet& z, int t);

/// h^1 deficiency |Z| - h_Z(t): 0 exactly when Z imposes independent
/// conditions on (is separated by) degree-t forms.
std::size_t h1_deficiency(const PointSet& z, int t);

/// Dimension of the projective span; throws on the empty set.
std::size_t span_dimension(const PointSet& z);

/// Size of the largest collinear subset, together with a generating pair of
/// one maximal line (the first such pair in canonical order). |Z| >= 2
/// required.
struct CollinearCount {
    std::size_t count = 0;
    ProjPoint a, b;
};
CollinearCount max_collinear(const PointSet& z);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// Image of a point under the degree-d Veronese embedding: the coefficient
/// vector of L^d over the canonical monomial order, as a projective point.
ProjPoint veronese(const ProjPoint& p, int d);

/// Linear subspace of P^N cut out by linear equations (rows of `equations`).
struct LinearSubspace {
    std::size_t ambient_dim = 0;
    MatrixQ equations;  // rows: equations; cols: N+1 coordinates

    bool contains(const ProjPoint& p) const;
    /// N - rank(equations); the projective dimension of the subspace.
    std::size_t dimension() const;
};

/// The line through two distinct points (kernel equations of their span).
LinearSubspace line_through(const ProjPoint& a, const ProjPoint& b);

/// Intersection point of two lines in P^3 given by generator pairs, or
/// nullopt when the lines are skew. The lines must be distinct.
std::optional<ProjPoint> line_intersection(const ProjPoint& a1, const ProjPoint& a2,
                                           const ProjPoint& b1, const ProjPoint& b2);

/// True when the spans of the two generator pairs are disjoint (skew lines).
bool lines_skew(const ProjPoint& a1, const ProjPoint& a2, const ProjPoint& b1,
                const ProjPoint& b2);

}  // namespace waring
