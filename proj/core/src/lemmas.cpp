#include "waring/lemmas.hpp"

#include <stdexcept>

namespace waring {

namespace {

void push(LemmaVerdict& v, std::string name, bool holds, std::string detail = "") {
    v.hypotheses.push_back({std::move(name), holds, std::move(detail)});
}

bool all_met(const LemmaVerdict& v) {
    for (const auto& h : v.hypotheses)
        if (!h.holds) return false;
    return true;
}

}  // namespace

LemmaVerdict check_celine(const PointSet& w, int u) {
    LemmaVerdict v;
    v.lemma = "celine";
    push(v, "u >= 3", u >= 3, "u = " + std::to_string(u));
    push(v, "|W| <= 2u - 2",
         u >= 3 && w.size() <= static_cast<std::size_t>(2 * u - 2),
         "|W| = " + std::to_string(w.size()));
    const bool spans = !w.empty() && span_dimension(w) >= 3;
    push(v, "W spans at least P^3", spans,
         w.empty() ? "W is empty" : "span dim = " + std::to_string(span_dimension(w)));
    if (u >= 3) {
        const std::size_t h1 = h1_deficiency(w, u - 2);
        push(v, "h1(W, u-2) > 0", h1 > 0, "h1 = " + std::to_string(h1));
        v.data["h1_u_minus_2"] = std::to_string(h1);
    }
    v.hypotheses_met = all_met(v);
    if (!v.hypotheses_met) return v;

    const CollinearCount cc = max_collinear(w);
    v.data["max_collinear"] = std::to_string(cc.count);
    v.conclusion_holds = cc.count >= static_cast<std::size_t>(u);
    return v;
}

LemmaVerdict check_residue_lemma(const PointSet& w1, const PointSet& w2,
                                 const LinearSubspace& r, int u) {
    if (w1.ambient_dim() != w2.ambient_dim() || w1.ambient_dim() != r.ambient_dim)
        throw std::invalid_argument("ambient dimension mismatch");
    LemmaVerdict v;
    v.lemma = "resid";
    push(v, "u >= 1", u >= 1, "u = " + std::to_string(u));

    bool w1_in_r = true;
    for (const auto& p : w1.points())
        if (!r.contains(p)) w1_in_r = false;
    push(v, "W1 lies in R", w1_in_r);

    const std::size_t eq_rank = rank(r.equations);
    push(v, "R is a proper subspace", eq_rank >= 1,
         "codimension = " + std::to_string(eq_rank));

    bool w2_off_r = true;
    for (const auto& p : w2.points())
        if (r.contains(p)) w2_off_r = false;
    push(v, "W2 misses R", w2_off_r);

    if (u >= 1) {
        const std::size_t h1w2 = h1_deficiency(w2, u - 1);
        push(v, "W2 separated in degree u-1", h1w2 == 0, "h1 = " + std::to_string(h1w2));
        v.data["h1_w2_u_minus_1"] = std::to_string(h1w2);
    }
    push(v, "|W1| <= u + 1", u >= 0 && w1.size() <= static_cast<std::size_t>(u + 1),
         "|W1| = " + std::to_string(w1.size()));
    v.hypotheses_met = all_met(v);
    if (!v.hypotheses_met) return v;

    const PointSet un = w1.union_with(w2);
    const std::size_t h1u = h1_deficiency(un, u);
    v.data["h1_union_u"] = std::to_string(h1u);
    v.conclusion_holds = h1u == 0;
    return v;
}

LemmaVerdict check_skew_union(const PointSet& zf, const PointSet& zg, int i) {
    if (zf.ambient_dim() != zg.ambient_dim())
        throw std::invalid_argument("ambient dimension mismatch");
    LemmaVerdict v;
    v.lemma = "skew";
    push(v, "i >= 1", i >= 1, "i = " + std::to_string(i));
    push(v, "|ZF| >= 2 and |ZG| >= 2", zf.size() >= 2 && zg.size() >= 2,
         "|ZF| = " + std::to_string(zf.size()) + ", |ZG| = " + std::to_string(zg.size()));

    const bool zf_line = !zf.empty() && span_dimension(zf) == 1;
    const bool zg_line = !zg.empty() && span_dimension(zg) == 1;
    push(v, "ZF is collinear", zf_line);
    push(v, "ZG is collinear", zg_line);

    bool skew = false;
    if (zf_line && zg_line) {
        // Spans are disjoint exactly when the joint coordinate rank is 4.
        const std::size_t joint = rank(zf.union_with(zg).coordinate_matrix());
        skew = joint == 4;
        v.data["joint_span_rank"] = std::to_string(joint);
    }
    push(v, "the two lines are skew", skew);

    if (i >= 1) {
        const std::size_t h1f = h1_deficiency(zf, i);
        const std::size_t h1g = h1_deficiency(zg, i);
        push(v, "ZF separated in degree i", h1f == 0, "h1 = " + std::to_string(h1f));
        push(v, "ZG separated in degree i", h1g == 0, "h1 = " + std::to_string(h1g));
    }
    v.hypotheses_met = all_met(v);
    if (!v.hypotheses_met) return v;

    const std::size_t h1u = h1_deficiency(zf.union_with(zg), i);
    v.data["h1_union_i"] = std::to_string(h1u);
    v.conclusion_holds = h1u == 0;
    return v;
}

}  // namespace waring
