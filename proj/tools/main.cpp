#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "thueforms/errors.hpp"
#include "thueforms/json_io.hpp"
#include "thueforms/verify.hpp"

namespace {

using namespace thue;

struct OutputTarget {
    std::unique_ptr<std::ofstream> file;
    std::ostream& stream() { return file ? *file : std::cout; }

    static OutputTarget open(const std::string& path) {
        OutputTarget t;
        if (!path.empty()) {
            t.file = std::make_unique<std::ofstream>(path);
            if (!*t.file) throw UsageError("cannot open output file: " + path);
        }
        return t;
    }
};

std::pair<long, long> parse_a_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        long lo = std::stol(s.substr(0, dots));
        long hi = std::stol(s.substr(dots + 2));
        if (lo > hi) throw UsageError("empty a-range: " + s);
        return {lo, hi};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("bad a value or range: '" + s + "' (use N or N..M)");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact twisted binary forms: construction, verification, search, diagnostics"};
    app.require_subcommand(1);

    std::string format = "json", out_path;
    long precision = 128;
    app.add_option("--format", format, "output format: json or csv")->capture_default_str();
    app.add_option("--precision", precision, "working precision in bits")->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // form
    auto* cmd_form = app.add_subcommand("form", "emit F_a coefficients");
    std::string form_desc, form_a = "0";
    cmd_form->add_option("descriptor", form_desc, "family descriptor")->required();
    cmd_form->add_option("--a", form_a, "index or range N..M")->capture_default_str();

    // coeffs
    auto* cmd_coeffs = app.add_subcommand("coeffs", "emit U_h(a) values");
    std::string coeffs_desc, coeffs_a = "0";
    int coeffs_h = 1;
    cmd_coeffs->add_option("descriptor", coeffs_desc)->required();
    cmd_coeffs->add_option("--h", coeffs_h, "coefficient index")->required();
    cmd_coeffs->add_option("--a", coeffs_a, "index or range N..M")->capture_default_str();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_desc, verify_suite, verify_a = "-4..4";
    cmd_verify->add_option("descriptor", verify_desc)->required();
    cmd_verify->add_option("--suite", verify_suite,
                           "prop41 | factorization | shanks | quadratic | cubic | ud")
        ->required();
    cmd_verify->add_option("--a", verify_a)->capture_default_str();

    // search
    auto* cmd_search = app.add_subcommand("search", "enumerate |F_a(x,y)| <= m over a box");
    std::string search_desc, search_a = "0", engine = "pruned";
    long long bound = 0;
    std::string m_str = "1";
    int threads = 0;
    cmd_search->add_option("descriptor", search_desc)->required();
    cmd_search->add_option("--a", search_a)->capture_default_str();
    cmd_search->add_option("--bound", bound, "|x|, |y| bound")->required();
    cmd_search->add_option("--m", m_str, "value bound m")->capture_default_str();
    cmd_search->add_option("--engine", engine, "oracle | pruned | both")->capture_default_str();
    cmd_search->add_option("--threads", threads, "worker threads (0 = hardware)");

    // siegel
    auto* cmd_siegel = app.add_subcommand("siegel", "embedding profile and identity residual");
    std::string siegel_desc, nu_str = "1/2", triple_str;
    long siegel_a = 0;
    long long siegel_x = 1, siegel_y = 1;
    cmd_siegel->add_option("descriptor", siegel_desc)->required();
    cmd_siegel->add_option("--a", siegel_a)->capture_default_str();
    cmd_siegel->add_option("--x", siegel_x)->capture_default_str();
    cmd_siegel->add_option("--y", siegel_y)->capture_default_str();
    cmd_siegel->add_option("--nu", nu_str, "band exponent in (0,1)")->capture_default_str();
    cmd_siegel->add_option("--triple", triple_str, "three embedding indices i,j,k");

    // lemma
    auto* cmd_lemma = app.add_subcommand("lemma", "fuzz the elementary inequality");
    int lemma_t = 4;
    long lemma_trials = 100000;
    std::uint64_t lemma_seed = 0;
    bool seed_given = false;
    cmd_lemma->add_option("--t", lemma_t, "4, 5 or 6")->capture_default_str();
    cmd_lemma->add_option("--trials", lemma_trials)->capture_default_str();
    cmd_lemma->add_option("--seed", lemma_seed, "rng seed (required)")
        ->each([&](const std::string&) { seed_given = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
    auto out = OutputTarget::open(out_path);
    std::ostream& os = out.stream();

    if (*cmd_form) {
        auto d = parse_descriptor(form_desc);
        auto fam = d.build();
        auto [lo, hi] = parse_a_range(form_a);
        for (long a = lo; a <= hi; ++a) {
            try {
                BinaryForm f = form_at(fam, a);
                if (format == "csv")
                    os << form_to_csv(f, a) << "\n";
                else
                    os << form_to_json(f, a).dump() << "\n";
            } catch (const DegenerateDegree& e) {
                if (format == "csv")
                    os << a << ",degenerate," << e.actual_degree << "\n";
                else
                    os << json{{"a", a}, {"degenerate", true}, {"degree", e.actual_degree}}.dump()
                       << "\n";
            }
        }
        return 0;
    }

    if (*cmd_coeffs) {
        auto d = parse_descriptor(coeffs_desc);
        auto fam = d.build();
        auto [lo, hi] = parse_a_range(coeffs_a);
        for (long a = lo; a <= hi; ++a) {
            try {
                Int u = coefficient_U(fam, coeffs_h, a);
                if (format == "csv")
                    os << a << "," << u << "\n";
                else
                    os << json{{"h", coeffs_h}, {"a", a}, {"U", to_string(u)}}.dump() << "\n";
            } catch (const DegenerateDegree& e) {
                os << json{{"a", a}, {"degenerate", true}, {"degree", e.actual_degree}}.dump()
                   << "\n";
            }
        }
        return 0;
    }

    if (*cmd_verify) {
        auto d = parse_descriptor(verify_desc);
        auto [lo, hi] = parse_a_range(verify_a);
        SuiteReport rep = run_suite(d, verify_suite, lo, hi, precision);
        os << rep.to_json().dump(2) << "\n";
        std::cerr << rep.summary() << "\n";
        return rep.pass() ? 0 : 1;
    }

    if (*cmd_search) {
        if (bound < 1) throw UsageError("--bound must be >= 1");
        if (engine != "oracle" && engine != "pruned" && engine != "both")
            throw UsageError("--engine must be oracle, pruned or both");
        auto d = parse_descriptor(search_desc);
        auto fam = d.build();
        auto [lo, hi] = parse_a_range(search_a);
        SearchBox box;
        box.a_min = lo;
        box.a_max = hi;
        box.xy_bound = bound;
        box.m = int_from_string(m_str);
        box.validate();

        SearchResult res;
        bool mismatch = false;
        if (engine == "oracle") {
            res = brute_force_search(fam, box, threads);
        } else if (engine == "pruned") {
            res = pruned_search(fam, box, precision, threads);
        } else {
            SearchResult oracle = brute_force_search(fam, box, threads);
            res = pruned_search(fam, box, precision, threads);
            mismatch = !(oracle.solutions == res.solutions);
        }
        KappaReport kr = kappa_report(res.solutions, box.m);
        if (format == "csv") {
            os << "a,x,y,value,kappa\n";
            for (const auto& s : res.solutions) {
                os << s.a << "," << s.x << "," << s.y << "," << s.value << ",";
                if (s.kappa) os << *s.kappa;
                os << "\n";
            }
        } else {
            for (const auto& s : res.solutions) os << solution_to_json(s).dump() << "\n";
            json summary = search_summary_json(res, kr);
            if (engine == "both") summary["engines_agree"] = !mismatch;
            os << json{{"summary", summary}}.dump() << "\n";
        }
        if (mismatch) {
            std::cerr << "engine mismatch: pruned and oracle solution sets differ\n";
            return 1;
        }
        return 0;
    }

    if (*cmd_siegel) {
        auto d = parse_descriptor(siegel_desc);
        auto fam = d.build();
        Rat nu = rat_from_string(nu_str);
        EmbeddingProfile prof = classify(fam, siegel_a, siegel_x, siegel_y, nu, precision);
        json j = profile_to_json(prof);
        if (!triple_str.empty()) {
            int i1, i2, i3;
            if (std::sscanf(triple_str.c_str(), "%d,%d,%d", &i1, &i2, &i3) != 3)
                throw UsageError("--triple expects i,j,k");
            try {
                SiegelResidual res = siegel_identity_check(prof, i1, i2, i3);
                j["residual"] = {{"contains_zero", res.contains_zero}, {"width", res.width}};
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            } catch (const std::out_of_range& e) {
                throw UsageError(e.what());
            }
        }
        os << j.dump(2) << "\n";
        bool ok = !j.contains("residual") || j["residual"]["contains_zero"].get<bool>();
        return ok ? 0 : 1;
    }

    if (*cmd_lemma) {
        if (!seed_given) throw UsageError("--seed is required for reproducible fuzzing");
        LemmaFuzzReport rep = lemma_fuzz(lemma_t, lemma_trials, lemma_seed);
        os << lemma_report_json(rep).dump() << "\n";
        return rep.failures == 0 ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
