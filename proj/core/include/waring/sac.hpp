#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/lemmas.hpp"
#include "waring/points.hpp"
#include "waring/rank.hpp"

namespace waring {

/// Partition of the ambient variables into a leading x-block and a trailing
/// y-block.
struct VariableSplit {
    std::size_t x_vars = 0;
    std::size_t y_vars = 0;

    std::size_t total() const { return x_vars + y_vars; }
    bool is_x(std::size_t i) const { return i < x_vars; }
};

/// The certified-additivity families, in the order they are tried.
enum class SacPath {
    one_variable,     // one side has a single essential variable
    essential_rank,   // one side's rank equals its essential variable count
    binary_binary,    // both sides have at most two essential variables
    coprime_monomials,  // both sides are monomials (disjoint variables)
    unproved,
};

std::string to_string(SacPath p);

/// One named cross-check run on a disjoint-variable pair.
struct ConsistencyCheck {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// Result of classifying a disjoint-variable pair and certifying the rank
/// of the sum where a proof applies. `certified_sum_rank` is present exactly
/// when `path != unproved`, and then equals exact(F) + exact(G).
struct SacReport {
    RankCertificate rank_f;
    RankCertificate rank_g;
    std::size_t sum_lower = 0;  // catalecticant lower bound for F + G
    std::size_t sum_upper = 0;  // certified value, or the sum of upper bounds
    std::optional<std::size_t> certified_sum_rank;
    SacPath path = SacPath::unproved;
    std::vector<SacPath> applicable_paths;
    std::vector<ConsistencyCheck> consistency;

    bool all_consistent() const {
        for (const auto& c : consistency)
            if (!c.holds) return false;
        return true;
    }
};

/// Classifies the pair (F, G) in disjoint variable blocks and certifies
/// rank(F + G) = rank(F) + rank(G) along the first applicable certified
/// family. Requires both forms nonzero, of the same degree >= 2, living in
/// the joint ring with F supported on the x-block and G on the y-block.
SacReport classify_and_certify(const Form& f, const Form& g, const VariableSplit& split);

/// Decomposition split into the parts relevant for additivity analysis:
/// the mixed terms, plus F and G with the pure-block contributions
/// subtracted off.
struct ReducedDecomposition {
    Form f_prime;
    Form g_prime;
    Decomposition mixed;
    std::size_t removed_pure_x = 0;
    std::size_t removed_pure_y = 0;
};

/// Splits a decomposition of F + G by the variable support of its points.
/// Throws when the decomposition does not expand to F + G.
ReducedDecomposition reduce_decomposition(const Form& f, const Form& g, const Decomposition& d,
                                          const VariableSplit& split);

enum class Block { x, y };

/// Projects every point of the decomposition onto one block (zeroing the
/// other block's coordinates), dropping points that project to zero and
/// merging terms whose projections become proportional.
Decomposition project_decomposition(const Decomposition& d, Block block,
                                    const VariableSplit& split);

/// Replays the two-case separation argument for the union of a collinear
/// set ZF (on a line R_F), a collinear set ZG (on a skew line R_G) and a
/// spanning set ZH in P^3: after the stated preconditions, the union is
/// separated in degree d, via residuation through R_G, R_F and (in the
/// second case) the unique d-point line of ZH. The verdict records each
/// chained step.
LemmaVerdict check_add2_configuration(const PointSet& zf, const PointSet& zg,
                                      const PointSet& zh, int d);

/// A generated additivity test instance: binary F in x0, x1 and binary G in
/// y0, y1, embedded in the joint 4-variable ring, with decomposition
/// witnesses certifying the target ranks were reached.
struct SacInstance {
    Form f;
    Form g;
    VariableSplit split;
    std::size_t rank_f = 0;
    std::size_t rank_g = 0;
    Decomposition witness_f;
    Decomposition witness_g;
    std::uint64_t seed = 0;
};

/// Deterministically generates a pair of binary forms of degree d with
/// Sylvester-verified ranks exactly r and s (1 <= r, s <= d). The witness
/// decompositions expand to the forms; for ranks above (d+1)/2 the witness
/// may use more than r points (a minimal rational witness need not exist).
SacInstance random_instance(int d, std::size_t r, std::size_t s, std::uint64_t seed);

}  // namespace waring
