#ifndef THUEFORMS_SIEGEL_HPP
#define THUEFORMS_SIEGEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "thueforms/forms.hpp"

namespace thue {

// Certified classification of the embeddings by |phi(alpha eps^a)| and
// |phi(beta)|, beta = x - alpha eps^a y, together with the band sets
// Sigma(nu) and T(nu). Band membership uses outward-rounded "possible"
// comparisons, so structural ties (conjugate pairs, rational beta) stay in.
struct EmbeddingProfile {
    long a;
    long long x, y;
    long precision_bits;
    Rat nu_param;

    std::vector<ComplexInterval> values_gamma; // phi(alpha eps^a)
    std::vector<ComplexInterval> values_beta;  // phi(beta)

    int idx_sigma_alpha, idx_tau_alpha, idx_sigma_beta, idx_tau_beta;
    bool ambiguous_sigma_alpha, ambiguous_tau_alpha, ambiguous_sigma_beta, ambiguous_tau_beta;

    std::vector<int> sigma_set_alpha; // Sigma_alpha(nu)
    std::vector<int> sigma_set_beta;
    std::vector<int> t_set_alpha; // T_alpha(nu)
    std::vector<int> t_set_beta;
};

EmbeddingProfile classify(const TwistedFamily& family, long a, long long x, long long y,
                          const Rat& nu_param, long precision_bits);

struct SiegelResidual {
    bool contains_zero;
    double width; // max component width of the six-term sum
};

// u1 v2 - u1 v3 + u2 v3 - u2 v1 + u3 v1 - u3 v2 over the embeddings i1,i2,i3;
// an exact identity, so the enclosure must contain 0.
SiegelResidual siegel_identity_check(const EmbeddingProfile& profile, int i1, int i2, int i3);

// ------------------------------------------------------------ lemma checker

struct LemmaInstance {
    int t;
    std::vector<Rat> xs;
    Rat delta;
    Rat mu;
};

enum class LemmaVerdict {
    HypothesisFailedDelta,   // not 0 < delta <= 1/(t-2) - 1/mu
    HypothesisFailedSum,     // x_1 + ... + x_t != 0
    HypothesisFailedBound,   // some |x_i| > delta max(|x_1|, |x_2|), i >= 3
    ConclusionHolds,
    ConclusionFails,
};

std::string verdict_name(LemmaVerdict v);

LemmaVerdict lemma_check(const LemmaInstance& inst);

struct LemmaFuzzReport {
    int t;
    Rat delta;
    Rat mu;
    long trials;   // accepted tuples checked
    long failures; // ConclusionFails count (the lemma guarantees 0)
    std::uint64_t seed;
    long rejected; // tuples rejected by the x_t bound
};

// mu = t, delta = 2/(t(t-2)); tuples generated to satisfy the hypotheses by
// construction, with rejection on the x_t bound. Exact rational arithmetic
// throughout; per-attempt rng streams derived from the seed.
LemmaFuzzReport lemma_fuzz(int t, long trials, std::uint64_t seed);

} // namespace thue

#endif
