#include "thueforms/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "thueforms/errors.hpp"
#include "thueforms/roots.hpp"

namespace thue {

void SearchBox::validate() const {
    if (a_min > a_max) throw UsageError("a_min > a_max");
    if (xy_bound < 1) throw UsageError("xy_bound must be >= 1");
    if (m < 1) throw UsageError("m must be >= 1");
}

namespace {

double kappa_of(long a, long long x, long long y, double log_m) {
    double v = std::max({std::log(std::abs(static_cast<double>(x))),
                         std::log(std::abs(static_cast<double>(y))),
                         static_cast<double>(std::labs(a))});
    return v / log_m;
}

void fill_kappa(std::vector<Solution>& sols, const Int& m) {
    if (m < 2) return;
    double log_m = std::log(m.convert_to<double>());
    for (auto& s : sols) s.kappa = kappa_of(s.a, s.x, s.y, log_m);
}

void sort_solutions(std::vector<Solution>& sols) {
    std::sort(sols.begin(), sols.end(), [](const Solution& a, const Solution& b) {
        if (a.a != b.a) return a.a < b.a;
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    });
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// run tasks [0, n) on a small pool; results land in caller-owned slots
void parallel_for_tasks(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    int nt = std::min<std::size_t>(resolve_threads(threads), n);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

// 128-bit evaluation fast path: usable when sum |c_h| B^d fits comfortably
struct FastForm {
    std::vector<__int128> coeffs;
    int degree;

    static std::optional<FastForm> make(const BinaryForm& f, long long bound, const Int& m) {
        if (msb(m + 1) >= 62) return std::nullopt;
        Int worst(0);
        for (const auto& c : f.coeffs) worst += abs(c);
        worst *= int_pow(Int(bound), static_cast<unsigned long>(f.degree));
        if (msb(worst + 1) >= 120) return std::nullopt;
        FastForm ff;
        ff.degree = f.degree;
        for (const auto& c : f.coeffs) {
            if (msb(abs(c) + 1) >= 62) return std::nullopt;
            ff.coeffs.push_back(static_cast<__int128>(c.convert_to<long long>()));
        }
        return ff;
    }

    __int128 eval(long long x, long long y) const {
        __int128 acc = coeffs[0];
        __int128 ypow = 1;
        for (int h = 1; h <= degree; ++h) {
            ypow *= y;
            acc = acc * x + coeffs[h] * ypow;
        }
        return acc;
    }
};

Int int128_to_int(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    Int r = Int(static_cast<std::uint64_t>(u >> 64));
    r <<= 64;
    r += Int(static_cast<std::uint64_t>(u));
    return neg ? -r : r;
}

// all solutions with the given y (x scanned over [-B, B] \ {0})
void scan_full_row(const BinaryForm& form, const std::optional<FastForm>& fast, long a,
                   long long y, long long bound, const Int& m, std::vector<Solution>& out) {
    if (fast) {
        __int128 mm = static_cast<__int128>(m.convert_to<long long>());
        for (long long x = -bound; x <= bound; ++x) {
            if (x == 0) continue;
            __int128 v = fast->eval(x, y);
            if (v <= mm && v >= -mm) out.push_back({a, x, y, int128_to_int(v), std::nullopt});
        }
        return;
    }
    for (long long x = -bound; x <= bound; ++x) {
        if (x == 0) continue;
        Int v = form.evaluate(Int(x), Int(y));
        if (abs(v) <= m) out.push_back({a, x, y, v, std::nullopt});
    }
}

struct ARow {
    long a;
    std::optional<BinaryForm> form; // nullopt when degenerate
    int actual_degree = 0;
};

std::vector<ARow> forms_on_range(const TwistedFamily& family, long a_min, long a_max) {
    std::vector<ARow> rows;
    for (long a = a_min; a <= a_max; ++a) {
        ARow row;
        row.a = a;
        try {
            row.form = form_at(family, a);
        } catch (const DegenerateDegree& e) {
            row.actual_degree = e.actual_degree;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

SearchResult brute_force_search(const TwistedFamily& family, const SearchBox& box, int threads) {
    box.validate();
    auto rows = forms_on_range(family, box.a_min, box.a_max);
    SearchResult result;
    std::vector<std::vector<Solution>> slots(rows.size());
    parallel_for_tasks(rows.size(), threads, [&](std::size_t i) {
        const ARow& row = rows[i];
        if (!row.form) return;
        auto fast = FastForm::make(*row.form, box.xy_bound, box.m);
        for (long long y = -box.xy_bound; y <= box.xy_bound; ++y) {
            if (y == 0) continue;
            scan_full_row(*row.form, fast, row.a, y, box.xy_bound, box.m, slots[i]);
        }
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].form) result.degenerate_a.emplace_back(rows[i].a, rows[i].actual_degree);
        for (auto& s : slots[i]) result.solutions.push_back(std::move(s));
    }
    sort_solutions(result.solutions);
    fill_kappa(result.solutions, box.m);
    return result;
}

namespace {

struct RootWindows {
    // exact rational data per form
    std::vector<RootDisc> roots;
    std::vector<Rat> sep; // sep[i*d+j]: certified lower bound for |theta_i - theta_j|
    long long y0 = 0;     // brute-force band: |y| <= y0
    Rat half_window_scale; // W_i(y) numerator before dividing by prod and |y|^(d-1)
};

RootWindows build_windows(const BinaryForm& form, const Int& m, long long bound,
                          long precision_bits) {
    const int d = form.degree;
    IntPoly fx(std::vector<Int>(form.coeffs.rbegin(), form.coeffs.rend()));
    RootWindows w;
    w.roots = certified_roots(fx, precision_bits);
    w.sep.assign(static_cast<std::size_t>(d) * d, Rat(0));
    Rat min_sep(-1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Rat dist2 = (w.roots[i].re - w.roots[j].re) * (w.roots[i].re - w.roots[j].re) +
                        (w.roots[i].im - w.roots[j].im) * (w.roots[i].im - w.roots[j].im);
            Rat lb = sqrt_lower_bound(dist2) - w.roots[i].radius - w.roots[j].radius;
            if (lb <= 0) throw PrecisionExhausted("root separation not positive at this precision");
            w.sep[i * d + j] = w.sep[j * d + i] = lb;
            if (min_sep < 0 || lb < min_sep) min_sep = lb;
        }

    // |y| >= y1 ensures m^(1/d) <= min_sep |y| / 2
    Int mroot = nth_root_floor(m, d) + 1;
    Int y1 = rat_ceil(Rat(2 * mroot) / min_sep);

    // complex roots repel solutions once C_i / |y|^(d-1) < im_i |y|
    Int yc(0);
    for (int i = 0; i < d; ++i) {
        if (w.roots[i].real) continue;
        Rat im_lb = abs(w.roots[i].im) - w.roots[i].radius;
        Rat prod(1);
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            prod *= w.sep[i * d + j] / 2;
        }
        Rat c = Rat(m) / (prod * im_lb);
        Int t = nth_root_floor(rat_ceil(c) < 0 ? Int(0) : rat_ceil(c), d) + 1;
        if (t > yc) yc = t;
    }
    Int y0 = std::max(y1, yc);
    if (y0 < 1) y0 = 1;
    w.y0 = y0 > bound ? bound : y0.convert_to<long long>();
    w.half_window_scale = Rat(m);
    return w;
}

// merge integer ranges and drop 0
std::vector<std::pair<long long, long long>> merge_ranges(
    std::vector<std::pair<long long, long long>> rs) {
    std::vector<std::pair<long long, long long>> out;
    std::sort(rs.begin(), rs.end());
    for (auto& r : rs) {
        if (r.first > r.second) continue;
        if (!out.empty() && r.first <= out.back().second + 1)
            out.back().second = std::max(out.back().second, r.second);
        else
            out.push_back(r);
    }
    return out;
}

} // namespace

SearchResult pruned_search(const TwistedFamily& family, const SearchBox& box, long precision_bits,
                           int threads) {
    box.validate();
    auto rows = forms_on_range(family, box.a_min, box.a_max);
    SearchResult result;
    std::vector<std::vector<Solution>> slots(rows.size());
    parallel_for_tasks(rows.size(), threads, [&](std::size_t idx) {
        const ARow& row = rows[idx];
        if (!row.form) return;
        const BinaryForm& form = *row.form;
        const int d = form.degree;
        RootWindows w = build_windows(form, box.m, box.xy_bound, precision_bits);
        auto fast = FastForm::make(form, box.xy_bound, box.m);

        for (long long y = -w.y0; y <= w.y0; ++y) {
            if (y == 0) continue;
            scan_full_row(form, fast, row.a, y, box.xy_bound, box.m, slots[idx]);
        }

        auto check_candidate = [&](long long x, long long y) {
            if (x == 0 || x < -box.xy_bound || x > box.xy_bound) return;
            Int v = form.evaluate(Int(x), Int(y));
            if (abs(v) <= box.m) slots[idx].push_back({row.a, x, y, v, std::nullopt});
        };

        auto windows_at = [&](long long y) {
            std::vector<std::pair<long long, long long>> ranges;
            for (int i = 0; i < d; ++i) {
                if (!w.roots[i].real) continue;
                Rat prod(1);
                for (int j = 0; j < d; ++j) {
                    if (j == i) continue;
                    prod *= w.sep[i * d + j] * Int(std::llabs(y)) / 2;
                }
                Rat half = Rat(box.m) / prod;
                Rat lo = (w.roots[i].re - w.roots[i].radius) * Int(y);
                Rat hi = (w.roots[i].re + w.roots[i].radius) * Int(y);
                if (lo > hi) std::swap(lo, hi);
                Rat xlo = lo - half, xhi = hi + half;
                if (xhi < -box.xy_bound || xlo > box.xy_bound) continue;
                if (xlo < -box.xy_bound) xlo = -box.xy_bound;
                if (xhi > box.xy_bound) xhi = box.xy_bound;
                ranges.emplace_back(rat_ceil(xlo).convert_to<long long>(),
                                    rat_floor(xhi).convert_to<long long>());
            }
            return merge_ranges(std::move(ranges));
        };

        for (long long ay = w.y0 + 1; ay <= box.xy_bound; ++ay) {
            for (long long y : {ay, -ay}) {
                for (const auto& [xlo, xhi] : windows_at(y))
                    for (long long x = xlo; x <= xhi; ++x) check_candidate(x, y);
            }
        }
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].form) result.degenerate_a.emplace_back(rows[i].a, rows[i].actual_degree);
        for (auto& s : slots[i]) result.solutions.push_back(std::move(s));
    }
    sort_solutions(result.solutions);
    fill_kappa(result.solutions, box.m);
    return result;
}

KappaReport kappa_report(const std::vector<Solution>& solutions, const Int& m) {
    KappaReport report;
    report.count = solutions.size();
    if (m < 2) return report;
    report.defined = true;
    double log_m = std::log(m.convert_to<double>());
    for (const auto& s : solutions) {
        double k = kappa_of(s.a, s.x, s.y, log_m);
        if (!report.witness || k > report.max_ratio) {
            report.max_ratio = k;
            Solution wit = s;
            wit.kappa = k;
            report.witness = wit;
        }
    }
    return report;
}

} // namespace thue
