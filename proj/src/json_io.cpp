#include "thueforms/json_io.hpp"

#include <sstream>

namespace thue {

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

json poly_to_json(const RatPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

json form_to_json(const BinaryForm& f, std::optional<long> a) {
    json j;
    j["degree"] = f.degree;
    json arr = json::array();
    for (const auto& c : f.coeffs) arr.push_back(to_string(c));
    j["coeffs"] = arr;
    if (a) j["a"] = *a;
    return j;
}

std::string form_to_csv(const BinaryForm& f, long a) {
    std::ostringstream os;
    os << a;
    for (const auto& c : f.coeffs) os << "," << c;
    return os.str();
}

json solution_to_json(const Solution& s) {
    json j;
    j["a"] = s.a;
    j["x"] = s.x;
    j["y"] = s.y;
    j["value"] = to_string(s.value);
    if (s.kappa)
        j["kappa"] = *s.kappa;
    else
        j["kappa"] = nullptr;
    return j;
}

json search_summary_json(const SearchResult& r, const KappaReport& k) {
    json j;
    j["count"] = r.solutions.size();
    json deg = json::array();
    for (const auto& [a, d] : r.degenerate_a) deg.push_back({{"a", a}, {"degree", d}});
    j["degenerate_a"] = deg;
    if (k.defined) {
        j["max_kappa"] = k.max_ratio;
        if (k.witness) j["witness"] = solution_to_json(*k.witness);
    } else {
        j["max_kappa"] = nullptr;
        j["note"] = "kappa undefined for m < 2";
    }
    return j;
}

json profile_to_json(const EmbeddingProfile& p) {
    json j;
    j["a"] = p.a;
    j["x"] = p.x;
    j["y"] = p.y;
    j["nu"] = to_string(p.nu_param);
    j["precision_bits"] = p.precision_bits;
    j["sigma_alpha"] = p.idx_sigma_alpha;
    j["tau_alpha"] = p.idx_tau_alpha;
    j["sigma_beta"] = p.idx_sigma_beta;
    j["tau_beta"] = p.idx_tau_beta;
    j["Sigma_alpha"] = p.sigma_set_alpha;
    j["Sigma_beta"] = p.sigma_set_beta;
    j["T_alpha"] = p.t_set_alpha;
    j["T_beta"] = p.t_set_beta;
    json amb = json::array();
    if (p.ambiguous_sigma_alpha) amb.push_back("sigma_alpha");
    if (p.ambiguous_tau_alpha) amb.push_back("tau_alpha");
    if (p.ambiguous_sigma_beta) amb.push_back("sigma_beta");
    if (p.ambiguous_tau_beta) amb.push_back("tau_beta");
    j["ambiguous"] = amb;
    return j;
}

json lemma_report_json(const LemmaFuzzReport& r) {
    json j;
    j["t"] = r.t;
    j["delta"] = to_string(r.delta);
    j["mu"] = to_string(r.mu);
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["seed"] = r.seed;
    return j;
}

} // namespace thue
