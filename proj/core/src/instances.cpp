#include "waring/instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

long Rng::uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = range * (UINT64_MAX / range);
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return lo + static_cast<long>(x % range);
}

long Rng::nonzero(long bound) {
    long x;
    do {
        x = uniform(-bound, bound);
    } while (x == 0);
    return x;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Form random_form(Rng& rng, std::size_t num_vars, int degree, std::size_t max_terms,
                 long coeff_bound) {
    const auto monos = monomials_of_degree(num_vars, degree);
    Form f(num_vars, degree);
    const std::size_t want = static_cast<std::size_t>(
        rng.uniform(1, static_cast<long>(std::min(max_terms, monos.size()))));
    std::vector<std::size_t> idx(monos.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    rng.shuffle(idx);
    for (std::size_t i = 0; i < want; ++i)
        f.add_term(monos[idx[i]], Rational(rng.nonzero(coeff_bound)));
    // Make the top variable intrinsic: ensure it appears in some term.
    bool top_used = false;
    for (const auto& [m, c] : f.terms())
        if (m.exponents[num_vars - 1] > 0) top_used = true;
    if (!top_used) {
        std::vector<int> e(num_vars, 0);
        e[num_vars - 1] = degree;
        f.add_term(Monomial(std::move(e)), Rational(rng.nonzero(coeff_bound)));
    }
    return f;
}

Form random_binary_form(Rng& rng, int degree) {
    Form f(2, degree);
    while (f.is_zero()) {
        for (int j = 0; j <= degree; ++j) {
            const long c = rng.uniform(-9, 9);
            if (c != 0) f.add_term(Monomial({j, degree - j}), Rational(c));
        }
    }
    return f;
}

ProjPoint random_point(Rng& rng, std::size_t ambient, long coord_bound) {
    while (true) {
        std::vector<Rational> coords(ambient + 1);
        bool nonzero = false;
        for (auto& c : coords) {
            c = Rational(rng.uniform(-coord_bound, coord_bound));
            if (!c.is_zero()) nonzero = true;
        }
        if (nonzero) return ProjPoint(std::move(coords));
    }
}

namespace {

/// Point a + t * b on the line spanned by two points (t rational, or the
/// point b itself for the parameter at infinity).
ProjPoint line_point(const ProjPoint& a, const ProjPoint& b, const Rational& t) {
    std::vector<Rational> coords(a.coords());
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += t * b.coords()[i];
    return ProjPoint(std::move(coords));
}

/// k distinct points on the line through a and b, using distinct small
/// parameters (never returning b itself).
std::vector<ProjPoint> distinct_line_points(Rng& rng, const ProjPoint& a, const ProjPoint& b,
                                            std::size_t k) {
    std::vector<long> pool;
    for (long t = -9; t <= 9; ++t) pool.push_back(t);
    rng.shuffle(pool);
    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < k; ++i) pts.push_back(line_point(a, b, Rational(pool.at(i))));
    return pts;
}

void append_general_points(Rng& rng, std::vector<ProjPoint>& pts, std::size_t count,
                           long coord_bound) {
    while (count > 0) {
        ProjPoint p = random_point(rng, 3, coord_bound);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
            pts.push_back(std::move(p));
            --count;
        }
    }
}

}  // namespace

PointSet random_point_set(Rng& rng, std::size_t ambient, std::size_t count, long coord_bound,
                          std::size_t cluster_size) {
    std::vector<ProjPoint> pts;
    if (cluster_size >= 2 && cluster_size <= count) {
        const ProjPoint a = random_point(rng, ambient, coord_bound);
        ProjPoint b = a;
        while (b == a) b = random_point(rng, ambient, coord_bound);
        for (const auto& p : distinct_line_points(rng, a, b, cluster_size)) pts.push_back(p);
    }
    while (pts.size() < count) {
        ProjPoint p = random_point(rng, ambient, coord_bound);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    return PointSet(ambient, std::move(pts));
}

CelineConfig random_celine_config(std::uint64_t seed) {
    Rng rng(seed);
    CelineConfig cfg;
    cfg.seed = seed;
    cfg.u = static_cast<int>(rng.uniform(3, 7));
    const std::size_t max_w = static_cast<std::size_t>(2 * cfg.u - 2);
    const bool clustered = rng.uniform(0, 99) < 70;
    std::size_t cluster = 0;
    if (clustered)
        cluster = static_cast<std::size_t>(
            rng.uniform(2, std::min<long>(cfg.u + 1, static_cast<long>(max_w))));
    const std::size_t total = static_cast<std::size_t>(
        rng.uniform(static_cast<long>(std::max<std::size_t>(cluster, 4)),
                    static_cast<long>(max_w)));
    cfg.w = random_point_set(rng, 3, total, 5, cluster);
    return cfg;
}

ResidConfig random_resid_config(std::uint64_t seed) {
    Rng rng(seed);
    ResidConfig cfg;
    cfg.seed = seed;
    cfg.u = static_cast<int>(rng.uniform(2, 5));

    const bool plane = rng.uniform(0, 99) < 70;
    std::vector<ProjPoint> on_r;
    if (plane) {
        std::vector<Rational> eq(4);
        bool nz = false;
        while (!nz)
            for (auto& c : eq) {
                c = Rational(rng.uniform(-3, 3));
                if (!c.is_zero()) nz = true;
            }
        cfg.r.ambient_dim = 3;
        cfg.r.equations = MatrixQ::from_rows({eq});
        const auto basis = kernel_basis(cfg.r.equations);  // 3 spanning points
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, cfg.u + 2));
        while (on_r.size() < k) {
            std::vector<Rational> coords(4);
            bool nonzero = false;
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const Rational c(rng.uniform(-4, 4));
                for (std::size_t i = 0; i < 4; ++i) coords[i] += c * basis[b][i];
            }
            for (const auto& c : coords)
                if (!c.is_zero()) nonzero = true;
            if (!nonzero) continue;
            ProjPoint p(std::move(coords));
            if (std::find(on_r.begin(), on_r.end(), p) == on_r.end()) on_r.push_back(std::move(p));
        }
    } else {
        const ProjPoint a = random_point(rng, 3, 4);
        ProjPoint b = a;
        while (b == a) b = random_point(rng, 3, 4);
        const LinearSubspace line = line_through(a, b);
        cfg.r = line;
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, cfg.u + 2));
        on_r = distinct_line_points(rng, a, b, k);
    }
    cfg.w1 = PointSet(3, std::move(on_r));

    std::vector<ProjPoint> w2;
    const std::size_t m = static_cast<std::size_t>(rng.uniform(0, 6));
    while (w2.size() < m) {
        ProjPoint p = random_point(rng, 3, 5);
        if (!cfg.r.contains(p) && std::find(w2.begin(), w2.end(), p) == w2.end())
            w2.push_back(std::move(p));
    }
    cfg.w2 = PointSet(3, std::move(w2));
    return cfg;
}

SkewConfig random_skew_config(std::uint64_t seed) {
    Rng rng(seed);
    SkewConfig cfg;
    cfg.seed = seed;
    cfg.i = static_cast<int>(rng.uniform(1, 4));
    while (true) {
        const ProjPoint a1 = random_point(rng, 3, 4);
        const ProjPoint a2 = random_point(rng, 3, 4);
        const ProjPoint b1 = random_point(rng, 3, 4);
        const ProjPoint b2 = random_point(rng, 3, 4);
        if (a1 == a2 || b1 == b2) continue;
        if (!lines_skew(a1, a2, b1, b2)) continue;
        const std::size_t nf = static_cast<std::size_t>(rng.uniform(2, cfg.i + 2));
        const std::size_t ng = static_cast<std::size_t>(rng.uniform(2, cfg.i + 2));
        cfg.zf = PointSet(3, distinct_line_points(rng, a1, a2, nf));
        cfg.zg = PointSet(3, distinct_line_points(rng, b1, b2, ng));
        return cfg;
    }
}

namespace {

bool add2_preconditions_met(const Add2Config& cfg) {
    const LemmaVerdict v = check_add2_configuration(cfg.zf, cfg.zg, cfg.zh, cfg.d);
    return v.hypotheses_met;
}

}  // namespace

Add2Config random_add2_config(std::uint64_t seed) {
    Rng rng(seed);
    Add2Config cfg;
    cfg.seed = seed;
    cfg.d = static_cast<int>(rng.uniform(4, 7));
    const bool want_case2 = rng.uniform(0, 1) == 1;
    const int d = cfg.d;

    for (int attempt = 0; attempt < 2000; ++attempt) {
        // Skew lines R_F and R_G.
        const ProjPoint f1 = random_point(rng, 3, 4);
        const ProjPoint f2 = random_point(rng, 3, 4);
        const ProjPoint g1 = random_point(rng, 3, 4);
        const ProjPoint g2 = random_point(rng, 3, 4);
        if (f1 == f2 || g1 == g2 || !lines_skew(f1, f2, g1, g2)) continue;
        const LinearSubspace rf = line_through(f1, f2);
        const LinearSubspace rg = line_through(g1, g2);

        const std::size_t nf = static_cast<std::size_t>(rng.uniform(3, d));
        const std::size_t ng = static_cast<std::size_t>(rng.uniform(3, d - 1));
        cfg.zf = PointSet(3, distinct_line_points(rng, f1, f2, nf));
        cfg.zg = PointSet(3, distinct_line_points(rng, g1, g2, ng));

        std::vector<ProjPoint> zh;
        const auto off_lines = [&](const ProjPoint& p) {
            return !rf.contains(p) && !rg.contains(p);
        };
        if (!want_case2) {
            const std::size_t nh = static_cast<std::size_t>(rng.uniform(4, 2 * d - 2));
            while (zh.size() < nh) {
                ProjPoint p = random_point(rng, 3, 6);
                if (off_lines(p) && std::find(zh.begin(), zh.end(), p) == zh.end())
                    zh.push_back(std::move(p));
            }
        } else {
            // A dedicated line R carrying exactly d points of ZH; R must
            // miss R_G but may or may not meet R_F.
            const ProjPoint r1 = random_point(rng, 3, 4);
            const ProjPoint r2 = random_point(rng, 3, 4);
            if (r1 == r2 || !lines_skew(r1, r2, g1, g2)) continue;
            const LinearSubspace r = line_through(r1, r2);
            std::vector<long> pool;
            for (long t = -9; t <= 9; ++t) pool.push_back(t);
            rng.shuffle(pool);
            std::size_t taken = 0;
            for (long t : pool) {
                if (taken == static_cast<std::size_t>(d)) break;
                ProjPoint p = line_point(r1, r2, Rational(t));
                if (!off_lines(p)) continue;
                zh.push_back(std::move(p));
                ++taken;
            }
            if (taken < static_cast<std::size_t>(d)) continue;
            const std::size_t extra = static_cast<std::size_t>(rng.uniform(2, d - 2 >= 2 ? d - 2 : 2));
            std::size_t added = 0;
            while (added < extra) {
                ProjPoint p = random_point(rng, 3, 6);
                if (off_lines(p) && !r.contains(p) &&
                    std::find(zh.begin(), zh.end(), p) == zh.end()) {
                    zh.push_back(std::move(p));
                    ++added;
                }
            }
        }
        cfg.zh = PointSet(3, std::move(zh));

        if (!add2_preconditions_met(cfg)) continue;
        const std::size_t maxcol = max_collinear(cfg.zh).count;
        const bool is_case2 = maxcol == static_cast<std::size_t>(d);
        if (is_case2 == want_case2) return cfg;
    }
    throw std::logic_error("add2 configuration generation exhausted its attempt budget");
}

// ---------------------------------------------------------------------------

namespace {

/// Binary form of degree d with Sylvester-certified rank exactly r, plus a
/// witness decomposition expanding to it.
std::pair<Form, Decomposition> binary_with_rank(Rng& rng, int d, std::size_t r) {
    const std::size_t low_rank_cap = static_cast<std::size_t>((d + 2) / 2);
    if (r <= low_rank_cap) {
        for (int attempt = 0; attempt < 2000; ++attempt) {
            // r distinct directions with small coordinates.
            std::vector<long> pool;
            for (long t = -9; t <= 9; ++t) pool.push_back(t);
            rng.shuffle(pool);
            std::vector<PowerTerm> terms;
            for (std::size_t i = 0; i < r; ++i) {
                std::vector<Rational> coeffs;
                if (i == 0 && rng.uniform(0, 3) == 0)
                    coeffs = {Rational(0), Rational(1)};  // the point at infinity
                else
                    coeffs = {Rational(1), Rational(pool.at(i))};
                terms.push_back({Rational(rng.nonzero(9)), LinearForm(std::move(coeffs))});
            }
            Decomposition dec(2, d, std::move(terms));
            Form f = dec.expand();
            if (f.is_zero()) continue;
            const RankCertificate cert = binary_rank(f);
            if (cert.exact && *cert.exact == r) return {std::move(f), std::move(dec)};
        }
        throw std::logic_error("binary rank sampling exhausted its attempt budget");
    }

    // High ranks: start from the monomial family x0^(d-r+1) * x1^(r-1) of
    // rank exactly r and apply a random invertible change of variables
    // (rank is invariant). The witness is read off by expressing the result
    // in a basis of d+1 pairwise independent d-th powers.
    const Form base = Form::term(2, Monomial({d - static_cast<int>(r) + 1,
                                              static_cast<int>(r) - 1}), 1);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        MatrixQ a(2, 2);
        a.at(0, 0) = Rational(rng.uniform(-4, 4));
        a.at(0, 1) = Rational(rng.uniform(-4, 4));
        a.at(1, 0) = Rational(rng.uniform(-4, 4));
        a.at(1, 1) = Rational(rng.uniform(-4, 4));
        if ((a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0)).is_zero()) continue;
        const Form f = substitute(base, a);
        const RankCertificate cert = binary_rank(f);
        if (!cert.exact || *cert.exact != r) continue;

        // Power-basis expansion: (x0 + j*x1)^d for j = 0..d-1 plus x1^d
        // always spans the degree-d binary forms.
        std::vector<LinearForm> nodes;
        for (long j = 0; j < d; ++j) nodes.emplace_back(std::vector<Rational>{1, Rational(j)});
        nodes.emplace_back(std::vector<Rational>{0, 1});
        MatrixQ v(static_cast<std::size_t>(d) + 1, nodes.size());
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const auto col = power(nodes[j], d).coefficient_vector();
            for (std::size_t i = 0; i < col.size(); ++i) v.at(i, j) = col[i];
        }
        const auto sol = solve(v, f.coefficient_vector());
        if (!sol) continue;
        std::vector<PowerTerm> terms;
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (!(*sol)[j].is_zero()) terms.push_back({(*sol)[j], nodes[j]});
        return {f, Decomposition(2, d, std::move(terms))};
    }
    throw std::logic_error("monomial-family perturbation exhausted its attempt budget");
}

Decomposition embed_decomposition(const Decomposition& dec, std::size_t total,
                                  std::size_t offset) {
    std::vector<PowerTerm> terms;
    for (const auto& t : dec.terms()) {
        std::vector<Rational> coeffs(total);
        for (std::size_t i = 0; i < t.linear.num_vars(); ++i)
            coeffs[offset + i] = t.linear.coeff(i);
        terms.push_back({t.coeff, LinearForm(std::move(coeffs))});
    }
    return Decomposition(total, dec.degree(), std::move(terms));
}

}  // namespace

SacInstance random_instance(int d, std::size_t r, std::size_t s, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    if (r < 1 || s < 1 || r > static_cast<std::size_t>(d) || s > static_cast<std::size_t>(d))
        throw std::invalid_argument("unachievable target rank (need 1 <= r, s <= d)");
    Rng rng(seed);
    auto [f2, wf] = binary_with_rank(rng, d, r);
    auto [g2, wg] = binary_with_rank(rng, d, s);
    SacInstance inst{embed(f2, 4, 0),
                     embed(g2, 4, 2),
                     VariableSplit{2, 2},
                     r,
                     s,
                     embed_decomposition(wf, 4, 0),
                     embed_decomposition(wg, 4, 2),
                     seed};
    return inst;
}

}  // namespace waring
