#pragma once

#include <cstdint>
#include <random>

#include "waring/sac.hpp"

namespace waring {

/// Deterministic random source. mt19937_64 has a standard-specified output
/// sequence, and the helpers below avoid the implementation-defined
/// std::uniform_int_distribution, so streams are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive; unbiased via rejection.
    long uniform(long lo, long hi);

    /// Uniform nonzero integer in [-bound, bound].
    long nonzero(long bound);

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<long>(i) - 1))]);
    }

private:
    std::mt19937_64 eng_;
};

/// Stream-splitting helper: decorrelates per-case seeds derived from a
/// campaign seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

/// Random nonzero form: up to max_terms monomials of the given degree with
/// nonzero coefficients in [-coeff_bound, coeff_bound]; the last variable is
/// guaranteed to appear so the variable count is intrinsic.
Form random_form(Rng& rng, std::size_t num_vars, int degree, std::size_t max_terms,
                 long coeff_bound);

/// Random nonzero binary form of the given degree (dense coefficients with
/// some zeros).
Form random_binary_form(Rng& rng, int degree);

ProjPoint random_point(Rng& rng, std::size_t ambient, long coord_bound);

/// Random point set; when cluster_size >= 2 the first cluster_size points
/// are placed on a random line.
PointSet random_point_set(Rng& rng, std::size_t ambient, std::size_t count, long coord_bound,
                          std::size_t cluster_size = 0);

struct CelineConfig {
    PointSet w{3};
    int u = 3;
    std::uint64_t seed = 0;
};

struct ResidConfig {
    PointSet w1{3}, w2{3};
    LinearSubspace r;
    int u = 1;
    std::uint64_t seed = 0;
};

struct SkewConfig {
    PointSet zf{3}, zg{3};
    int i = 1;
    std::uint64_t seed = 0;
};

struct Add2Config {
    PointSet zf{3}, zg{3}, zh{3};
    int d = 4;
    std::uint64_t seed = 0;
};

/// Mixed configurations in P^3: collinear clusters plus general points,
/// |W| <= 2u - 2, u in 3..7. Hypotheses of the growth lemma are sometimes
/// met and sometimes not, by design.
CelineConfig random_celine_config(std::uint64_t seed);

/// Mixed residuation configurations: W1 on a random plane or line R, W2 off
/// R; cardinalities straddle the lemma's bounds.
ResidConfig random_resid_config(std::uint64_t seed);

/// Two skew lines with point counts straddling the separation bound i + 1.
SkewConfig random_skew_config(std::uint64_t seed);

/// A configuration meeting every precondition of the two-line separation
/// replay, alternating by seed between the two proof cases (no d-point line
/// in ZH, and exactly one).
Add2Config random_add2_config(std::uint64_t seed);

}  // namespace waring
