#include "waring/points.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("point needs at least one coordinate");
    for (const Rational& c : coords_) {
        if (!c.is_zero()) {
            const Rational inv = c.inverse();
            for (Rational& x : coords_) x *= inv;
            return;
        }
    }
    throw std::invalid_argument("all-zero coordinates do not define a projective point");
}

PointSet::PointSet(std::size_t ambient_dim, std::vector<ProjPoint> points)
    : ambient_(ambient_dim), points_(std::move(points)) {
    for (const auto& p : points_)
        if (p.ambient_dim() != ambient_)
            throw std::invalid_argument("point has wrong ambient dimension");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const ProjPoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::union_with(const PointSet& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<ProjPoint> all = points_;
    all.insert(all.end(), other.points_.begin(), other.points_.end());
    return PointSet(ambient_, std::move(all));
}

PointSet PointSet::set_minus(const PointSet& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<ProjPoint> kept;
    for (const auto& p : points_)
        if (!other.contains(p)) kept.push_back(p);
    return PointSet(ambient_, std::move(kept));
}

MatrixQ PointSet::coordinate_matrix() const {
    MatrixQ m(points_.size(), ambient_ + 1);
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = 0; j <= ambient_; ++j) m.at(i, j) = points_[i].coords()[j];
    return m;
}

std::size_t hilbert_function(const PointSet& z, int t) {
    if (t < 0) throw std::invalid_argument("hilbert function needs t >= 0");
    if (z.empty()) return 0;
    const auto monos = monomials_of_degree(z.ambient_dim() + 1, t);
    MatrixQ ev(z.size(), monos.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < monos.size(); ++j)
            ev.at(i, j) = monos[j].evaluate(z.points()[i].coords());
    return rank(ev);
}

long first_difference(const PointSet& z, int t) {
    const long ht = static_cast<long>(hilbert_function(z, t));
    const long prev = t == 0 ? 0 : static_cast<long>(hilbert_function(z, t - 1));
    return ht - prev;
}

std::size_t h1_deficiency(const PointSet& z, int t) {
    return z.size() - hilbert_function(z, t);
}

std::size_t span_dimension(const PointSet& z) {
    if (z.empty()) throw std::invalid_argument("span of the empty set");
    return rank(z.coordinate_matrix()) - 1;
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    return rank(MatrixQ::from_rows({a.coords(), b.coords(), c.coords()})) <= 2;
}

CollinearCount max_collinear(const PointSet& z) {
    if (z.size() < 2) throw std::invalid_argument("max_collinear needs at least two points");
    const auto& pts = z.points();
    CollinearCount best{2, pts[0], pts[1]};
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            std::size_t count = 0;
            for (std::size_t m = 0; m < pts.size(); ++m)
                if (m == i || m == j || collinear(pts[i], pts[j], pts[m])) ++count;
            if (count > best.count) best = {count, pts[i], pts[j]};
        }
    return best;
}

ProjPoint veronese(const ProjPoint& p, int d) {
    if (d < 1) throw std::invalid_argument("veronese needs d >= 1");
    const Form pw = power(LinearForm(p.coords()), d);
    return ProjPoint(pw.coefficient_vector());
}

bool LinearSubspace::contains(const ProjPoint& p) const {
    for (const Rational& v : equations.apply(p.coords()))
        if (!v.is_zero()) return false;
    return true;
}

std::size_t LinearSubspace::dimension() const {
    return ambient_dim - rank(equations);
}

LinearSubspace line_through(const ProjPoint& a, const ProjPoint& b) {
    if (a == b) throw std::invalid_argument("line through equal points");
    const auto eqs = kernel_basis(MatrixQ::from_rows({a.coords(), b.coords()}));
    LinearSubspace s;
    s.ambient_dim = a.ambient_dim();
    s.equations = MatrixQ::from_rows(eqs);
    return s;
}

std::optional<ProjPoint> line_intersection(const ProjPoint& a1, const ProjPoint& a2,
                                           const ProjPoint& b1, const ProjPoint& b2) {
    // Columns are the four generators; a kernel vector (s, t, u, v) encodes
    // the common point s*a1 + t*a2 = -(u*b1 + v*b2).
    const std::size_t n = a1.ambient_dim() + 1;
    MatrixQ m(n, 4);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, 0) = a1.coords()[i];
        m.at(i, 1) = a2.coords()[i];
        m.at(i, 2) = b1.coords()[i];
        m.at(i, 3) = b2.coords()[i];
    }
    const auto ker = kernel_basis(m);
    if (ker.empty()) return std::nullopt;
    const auto& v = ker.front();
    std::vector<Rational> coords(n);
    for (std::size_t i = 0; i < n; ++i)
        coords[i] = v[0] * a1.coords()[i] + v[1] * a2.coords()[i];
    return ProjPoint(std::move(coords));
}

bool lines_skew(const ProjPoint& a1, const ProjPoint& a2, const ProjPoint& b1,
                const ProjPoint& b2) {
    return rank(MatrixQ::from_rows(
               {a1.coords(), a2.coords(), b1.coords(), b2.coords()})) == 4;
}

}  // namespace waring
