#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "waring/points.hpp"

namespace waring {

/// One named hypothesis of a lemma, with the outcome of checking it on the
/// given configuration.
struct HypothesisCheck {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// Outcome of replaying one lemma on a concrete configuration. When the
/// hypotheses are not all met, `conclusion_holds` is empty: the instance is
/// simply outside the lemma's scope, not a counterexample. A verdict with
/// hypotheses met and `conclusion_holds == false` is a genuine violation.
struct LemmaVerdict {
    std::string lemma;
    std::vector<HypothesisCheck> hypotheses;
    bool hypotheses_met = false;
    std::optional<bool> conclusion_holds;
    std::map<std::string, std::string> data;  // named intermediate values
};

/// Unexpected-growth lemma: if W spans at least a 3-dimensional projective
/// space, |W| <= 2u - 2 and W fails to impose independent conditions in
/// degree u - 2, then some line contains at least u points of W.
/// Requires u >= 3 (checked as a hypothesis).
LemmaVerdict check_celine(const PointSet& w, int u);

/// Residuation lemma: if W1 lies in a proper linear subspace R, W2 is
/// disjoint from R, W2 is separated in degree u - 1 and |W1| <= u + 1, then
/// W1 union W2 is separated in degree u.
LemmaVerdict check_residue_lemma(const PointSet& w1, const PointSet& w2,
                                 const LinearSubspace& r, int u);

/// Skew-union lemma: two collinear sets on skew lines, each separated in
/// degree i, have a union separated in degree i.
LemmaVerdict check_skew_union(const PointSet& zf, const PointSet& zg, int i);

}  // namespace waring
