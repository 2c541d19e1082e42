#include "thueforms/siegel.hpp"

#include <stdexcept>

#include "thueforms/errors.hpp"

namespace thue {

namespace {

// certified strict argmax of |values|; ambiguous when intervals overlap
std::pair<int, bool> argmax_abs(const std::vector<RealInterval>& abs_vals) {
    int best = 0;
    for (std::size_t i = 1; i < abs_vals.size(); ++i)
        if (abs_vals[i].hi().cmp(abs_vals[best].hi()) > 0) best = static_cast<int>(i);
    bool ambiguous = false;
    for (std::size_t i = 0; i < abs_vals.size(); ++i) {
        if (static_cast<int>(i) == best) continue;
        if (!RealInterval::certainly_less(abs_vals[i], abs_vals[best])) ambiguous = true;
    }
    return {best, ambiguous};
}

std::pair<int, bool> argmin_abs(const std::vector<RealInterval>& abs_vals) {
    int best = 0;
    for (std::size_t i = 1; i < abs_vals.size(); ++i)
        if (abs_vals[i].lo().cmp(abs_vals[best].lo()) < 0) best = static_cast<int>(i);
    bool ambiguous = false;
    for (std::size_t i = 0; i < abs_vals.size(); ++i) {
        if (static_cast<int>(i) == best) continue;
        if (!RealInterval::certainly_less(abs_vals[best], abs_vals[i])) ambiguous = true;
    }
    return {best, ambiguous};
}

RealInterval max_hull(const std::vector<RealInterval>& vals) {
    RealInterval m = vals[0];
    for (std::size_t i = 1; i < vals.size(); ++i) {
        const RealInterval& v = vals[i];
        m = RealInterval(m.lo().cmp(v.lo()) >= 0 ? m.lo() : v.lo(),
                         m.hi().cmp(v.hi()) >= 0 ? m.hi() : v.hi());
    }
    return m;
}

RealInterval min_hull(const std::vector<RealInterval>& vals) {
    RealInterval m = vals[0];
    for (std::size_t i = 1; i < vals.size(); ++i) {
        const RealInterval& v = vals[i];
        m = RealInterval(m.lo().cmp(v.lo()) <= 0 ? m.lo() : v.lo(),
                         m.hi().cmp(v.hi()) <= 0 ? m.hi() : v.hi());
    }
    return m;
}

} // namespace

EmbeddingProfile classify(const TwistedFamily& family, long a, long long x, long long y,
                          const Rat& nu_param, long precision_bits) {
    if (!(nu_param > 0 && nu_param < 1))
        throw std::invalid_argument("nu must lie in the open interval (0, 1)");
    auto set = embeddings(family.field(), precision_bits);
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(2 * precision_bits);

    FieldElement gamma = family.alpha_eps_pow(a);
    if (min_poly(gamma).degree() != family.degree())
        throw DegenerateDegree(min_poly(gamma).degree());
    FieldElement beta = FieldElement::from_rational(family.field(), Rat(x)) - gamma * Rat(y);

    EmbeddingProfile prof;
    prof.a = a;
    prof.x = x;
    prof.y = y;
    prof.precision_bits = precision_bits;
    prof.nu_param = nu_param;

    std::vector<RealInterval> abs_gamma, abs_beta;
    for (int i = 0; i < set.degree(); ++i) {
        prof.values_gamma.push_back(eval_embedding(gamma, set, i));
        prof.values_beta.push_back(eval_embedding(beta, set, i));
        abs_gamma.push_back(prof.values_gamma.back().abs());
        abs_beta.push_back(prof.values_beta.back().abs());
    }

    auto [sa, saamb] = argmax_abs(abs_gamma);
    auto [ta, taamb] = argmin_abs(abs_gamma);
    auto [sb, sbamb] = argmax_abs(abs_beta);
    auto [tb, tbamb] = argmin_abs(abs_beta);
    prof.idx_sigma_alpha = sa;
    prof.idx_tau_alpha = ta;
    prof.idx_sigma_beta = sb;
    prof.idx_tau_beta = tb;
    prof.ambiguous_sigma_alpha = saamb;
    prof.ambiguous_tau_alpha = taamb;
    prof.ambiguous_sigma_beta = sbamb;
    prof.ambiguous_tau_beta = tbamb;

    RealInterval nu_iv = RealInterval::from_rat(nu_param, wp);
    auto band_upper = [&](const std::vector<RealInterval>& vals, std::vector<int>& out) {
        // { phi : house^nu <= |phi| <= house }, possible-membership
        RealInterval house = max_hull(vals);
        RealInterval threshold = house.pow(nu_iv);
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (RealInterval::possibly_leq(threshold, vals[i])) out.push_back(static_cast<int>(i));
    };
    auto band_lower = [&](const std::vector<RealInterval>& vals, std::vector<int>& out) {
        // { phi : low <= |phi| <= low^nu }
        RealInterval low = min_hull(vals);
        RealInterval threshold = low.pow(nu_iv);
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (RealInterval::possibly_leq(vals[i], threshold)) out.push_back(static_cast<int>(i));
    };
    band_upper(abs_gamma, prof.sigma_set_alpha);
    band_upper(abs_beta, prof.sigma_set_beta);
    band_lower(abs_gamma, prof.t_set_alpha);
    band_lower(abs_beta, prof.t_set_beta);
    return prof;
}

SiegelResidual siegel_identity_check(const EmbeddingProfile& profile, int i1, int i2, int i3) {
    const int d = static_cast<int>(profile.values_gamma.size());
    if (i1 == i2 || i1 == i3 || i2 == i3)
        throw std::invalid_argument("embedding indices must be distinct");
    if (i1 < 0 || i2 < 0 || i3 < 0 || i1 >= d || i2 >= d || i3 >= d)
        throw std::out_of_range("embedding index");
    const ComplexInterval& u1 = profile.values_gamma[i1];
    const ComplexInterval& u2 = profile.values_gamma[i2];
    const ComplexInterval& u3 = profile.values_gamma[i3];
    const ComplexInterval& v1 = profile.values_beta[i1];
    const ComplexInterval& v2 = profile.values_beta[i2];
    const ComplexInterval& v3 = profile.values_beta[i3];
    ComplexInterval sum = u1 * v2 - u1 * v3 + u2 * v3 - u2 * v1 + u3 * v1 - u3 * v2;
    return {sum.contains_zero(), sum.width_double()};
}

// ---------------------------------------------------------------- lemma

std::string verdict_name(LemmaVerdict v) {
    switch (v) {
        case LemmaVerdict::HypothesisFailedDelta: return "HypothesisFailed(delta)";
        case LemmaVerdict::HypothesisFailedSum: return "HypothesisFailed(sum)";
        case LemmaVerdict::HypothesisFailedBound: return "HypothesisFailed(bound)";
        case LemmaVerdict::ConclusionHolds: return "ConclusionHolds";
        case LemmaVerdict::ConclusionFails: return "ConclusionFails";
    }
    return "?";
}

LemmaVerdict lemma_check(const LemmaInstance& inst) {
    if (inst.t < 3 || static_cast<int>(inst.xs.size()) != inst.t)
        throw std::invalid_argument("lemma instance needs t >= 3 values");
    if (!(inst.mu > 0) || !(inst.delta > 0) ||
        inst.delta > Rat(1, inst.t - 2) - Rat(1) / inst.mu)
        return LemmaVerdict::HypothesisFailedDelta;
    Rat sum(0);
    for (const auto& v : inst.xs) sum += v;
    if (sum != 0) return LemmaVerdict::HypothesisFailedSum;
    Rat mx = std::max(abs(inst.xs[0]), abs(inst.xs[1]));
    for (int i = 2; i < inst.t; ++i)
        if (abs(inst.xs[i]) > inst.delta * mx) return LemmaVerdict::HypothesisFailedBound;
    Rat mn = std::min(abs(inst.xs[0]), abs(inst.xs[1]));
    if (abs(inst.xs[0] + inst.xs[1]) <= inst.mu * inst.delta * mn)
        return LemmaVerdict::ConclusionHolds;
    return LemmaVerdict::ConclusionFails;
}

namespace {

// uniform in [-1, 1]
Rat random_unit(SplitMix64& rng) {
    auto mant = static_cast<std::int64_t>(rng.next());
    return Rat(Int(mant), int_pow(Int(2), 63));
}

} // namespace

LemmaFuzzReport lemma_fuzz(int t, long trials, std::uint64_t seed) {
    if (t != 4 && t != 5 && t != 6)
        throw std::invalid_argument("t must be 4, 5 or 6");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    LemmaFuzzReport report;
    report.t = t;
    report.mu = Rat(t);
    report.delta = Rat(2, t * (t - 2));
    report.trials = 0;
    report.failures = 0;
    report.seed = seed;
    report.rejected = 0;

    std::uint64_t attempt = 0;
    while (report.trials < trials) {
        SplitMix64 rng = SplitMix64::for_index(seed, attempt++);
        // x1 and x2 share one scale so the sum constraint is reachable
        unsigned shift = static_cast<unsigned>(rng.next() % 40);
        Rat scale(1, int_pow(Int(2), shift));
        Rat x1 = random_unit(rng) * scale;
        Rat x2 = random_unit(rng) * scale;
        std::vector<Rat> xs{x1, x2};
        Rat mx = std::max(abs(x1), abs(x2));
        Rat sum = x1 + x2;
        for (int i = 2; i < t - 1; ++i) {
            Rat v = random_unit(rng) * report.delta * mx;
            xs.push_back(v);
            sum += v;
        }
        xs.push_back(-sum);
        if (abs(xs.back()) > report.delta * mx) {
            ++report.rejected;
            continue;
        }
        ++report.trials;
        LemmaInstance inst{t, xs, report.delta, report.mu};
        LemmaVerdict v = lemma_check(inst);
        if (v == LemmaVerdict::ConclusionFails) ++report.failures;
    }
    return report;
}

} // namespace thue
