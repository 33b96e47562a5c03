#include "arithgrass/racah.hpp"

#include "arithgrass/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arithgrass {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::string triple(int n, int s, int T) {
    return "(n=" + std::to_string(n) + ", s=" + std::to_string(s) + ", T=" + std::to_string(T) + ")";
}

}  // namespace

Rational racah_eval(int n, int s, int T) {
    require(T >= 3, "racah_eval: T must be >= 3");
    require(n >= 0 && s >= 0, "racah_eval: negative degree " + triple(n, s, T));
    const int terms = std::min(n, s);
    require(terms <= T - 1, "racah_eval: min(n,s) > T-1 makes (1-T)_r vanish " + triple(n, s, T));

    // Horner on the term ratio t_{r+1}/t_r = num_r/den_r, kept as one
    // integer fraction P/Q and reduced once at the end.
    Integer P = 1;
    Integer Q = 1;
    for (int r = terms - 1; r >= 0; --r) {
        const Integer num = Integer(r - n) * (n + 1 + r) * (r - s) * (s + 1 + r);
        const Integer den = Integer(r + 1) * (r + 1) * (1 + T + r) * (1 - T + r);
        Q *= den;
        P *= num;
        P += Q;
    }
    return ratio(P, Q);
}

bool racah_symmetry_check(int n, int s, int T) { return racah_eval(n, s, T) == racah_eval(s, n, T); }

Rational legendre_eval(int n, const Rational& t) {
    require(n >= 0, "legendre_eval: negative degree");
    if (n == 0) return 1;
    Rational prev = 1;
    Rational cur = t;
    for (int m = 1; m < n; ++m) {
        Rational next = (Rational(2 * m + 1) * t * cur - m * prev) / (m + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational p_eval(int n, int T, const Rational& t) {
    require(n >= 0, "p_eval: negative degree");
    require(T >= 3, "p_eval: T must be >= 3");
    const Integer T2 = Integer(T) * T;
    if (n == 0) return 1;
    Rational prev = 1;
    Rational cur = t + ratio(1, 2 * T2);
    for (int m = 1; m < n; ++m) {
        const Rational shift = ratio(2 * m * m + 2 * m + 1, 2 * T2);
        const Rational damp = 1 - ratio(Integer(m) * m, T2);
        Rational next = (t + shift) * cur - damp * damp * ratio(m, 2 * m + 1) * prev;
        next *= ratio(2 * m + 1, m + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational racah_rescale(int n, int T) {
    const Integer T2 = Integer(T) * T;
    Integer num = 1;
    Integer den = 1;
    for (int i = 1; i <= n; ++i) {
        num *= T2 - Integer(i) * i;
        den *= T2;
    }
    if (n % 2 == 1) num = -num;
    return ratio(num, den);
}

Rational LatticeNode::x() const {
    const Integer T2 = Integer(T) * T;
    return Rational(-1, 4) + Rational(T2) * (1 + t) / 2;
}

LatticeNode node_t(int s, int T) {
    require(T >= 1 && s >= 0 && s <= T - 1,
            "node_t: need 0 <= s <= T-1, got s=" + std::to_string(s) + " T=" + std::to_string(T));
    const Integer odd = 2 * s + 1;
    return LatticeNode{s, T, ratio(odd * odd, 2 * Integer(T) * T) - 1};
}

OrthogonalityResult orthogonality_check(int T, int n, int m) {
    require(n >= 0 && m >= 0 && n <= T - 1 && m <= T - 1, "orthogonality_check: need 0 <= n, m <= T-1");
    OrthogonalityResult out;
    out.sum = 0;
    for (int s = 0; s <= T - 1; ++s) {
        out.sum += (2 * s + 1) * racah_eval(n, s, T) * racah_eval(m, s, T);
    }
    out.expected = n == m ? ratio(Integer(T) * T, 2 * n + 1) : Rational(0);
    out.holds = out.sum == out.expected;
    return out;
}

NeededVerdict needed_inequality(std::span<const Rational> seq, int n, int T) {
    require(T >= 3, "needed_inequality: T must be >= 3");
    require(n >= 0 && n <= T - 1, "needed_inequality: need 0 <= n <= T-1");
    require(seq.size() >= static_cast<std::size_t>(T - 1),
            "needed_inequality: sequence has " + std::to_string(seq.size()) + " terms, need " +
                std::to_string(T - 1));
    NeededVerdict v{n, T, 0, 0, false};
    for (int s = 1; s <= T - 1; ++s) {
        const Rational& h = seq[static_cast<std::size_t>(s - 1)];
        const Rational term = racah_eval(n, s, T) * h;
        if (s % 2 == 1) {
            v.lhs += term;
        } else {
            v.lhs -= term;
        }
        v.rhs += h;
    }
    v.holds = v.lhs < v.rhs;
    return v;
}

CauchyResult cauchy_sufficient(std::span<const Rational> seq, int n, int T) {
    require(T >= 3, "cauchy_sufficient: T must be >= 3");
    require(n >= 0 && n <= T - 1, "cauchy_sufficient: need 0 <= n <= T-1");
    require(seq.size() >= static_cast<std::size_t>(T - 1), "cauchy_sufficient: sequence too short");
    CauchyResult out{0, 0, false};
    Rational total = 0;
    for (int s = 1; s <= T - 1; ++s) {
        const Rational& h = seq[static_cast<std::size_t>(s - 1)];
        out.lhs += h * h / (2 * s + 1);
        total += h;
    }
    const Rational mean = total / T;
    out.rhs = (2 * n + 1) * mean * mean;
    out.holds = out.lhs < out.rhs;
    return out;
}

bool goodrange(int n, int T) {
    require(T >= 3 && n >= 0, "goodrange: need T >= 3 and n >= 0");
    return exp_exceeds(static_cast<unsigned>(2 * n + 1), Rational(Integer(T) * T));
}

bool below_log(int n, int T) {
    require(T >= 1 && n >= 0, "below_log: need T >= 1 and n >= 0");
    return !exp_exceeds(static_cast<unsigned>(n), Rational(T));
}

Rational closed_form_last(int s, int T) {
    require(s >= 0 && s <= T - 1, "closed_form_last: need 0 <= s <= T-1");
    Integer num = 1;
    Integer den = 1;
    for (int j = 1; j <= s; ++j) {
        num *= j - T;
        den *= j + T;
    }
    return ratio(num, den);
}

ScanReport bound_scan(int T_min, int T_max, unsigned workers) {
    require(T_min >= 3 && T_min <= T_max, "bound_scan: need 3 <= T_min <= T_max");
    const auto start = std::chrono::steady_clock::now();

    struct Row {
        int T;
        int n;
        std::vector<RacahPoint> over;
        std::vector<RacahPoint> equal;
        std::int64_t points = 0;
    };
    std::vector<Row> rows;
    for (int T = T_min; T <= T_max; ++T) {
        for (int n = 0; n <= T - 1; ++n) rows.push_back(Row{T, n, {}, {}, 0});
    }

    parallel_for(rows.size(), workers, [&](std::size_t idx) {
        Row& row = rows[idx];
        for (int s = row.n; s <= row.T - 1; ++s) {
            Rational v = racah_eval(row.n, s, row.T);
            const int c = cmp(abs(v), 1);
            if (c > 0) {
                row.over.push_back({row.T, row.n, s, std::move(v)});
            } else if (c == 0) {
                row.equal.push_back({row.T, row.n, s, std::move(v)});
            }
            ++row.points;
        }
    });

    ScanReport report;
    report.T_min = T_min;
    report.T_max = T_max;
    for (auto& row : rows) {
        ++report.rows_checked;
        report.points_checked += row.points;
        for (auto& p : row.over) report.violations.push_back(std::move(p));
        for (auto& p : row.equal) {
            if (p.n != 0 && p.s != 0) report.strictness_exceptions.push_back(p);
            report.equality_cases.push_back(std::move(p));
        }
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

namespace {

nlohmann::ordered_json point_json(const RacahPoint& p, bool with_value) {
    nlohmann::ordered_json j{{"T", p.T}, {"n", p.n}, {"s", p.s}};
    if (with_value) j["value"] = to_string(p.value);
    return j;
}

}  // namespace

nlohmann::ordered_json to_json(const ScanReport& r) {
    auto list = [](const std::vector<RacahPoint>& pts, bool with_value) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& p : pts) arr.push_back(point_json(p, with_value));
        return arr;
    };
    return {{"T_range", {r.T_min, r.T_max}},
            {"violations", list(r.violations, true)},
            {"equality_cases", list(r.equality_cases, false)},
            {"strictness_exceptions", list(r.strictness_exceptions, true)},
            {"rows_checked", r.rows_checked},
            {"points_checked", r.points_checked},
            {"elapsed_ms", r.elapsed_ms}};
}

DeviationResult deviation_check(int n, int T, int grid) {
    require(n >= 0 && T >= 3, "deviation_check: need n >= 0 and T >= 3");
    require(10 * (1 + 2 * n + 2 * n * n) < T * T, "deviation_check: hypothesis 1 + 2n + 2n^2 < T^2/10 fails");
    require(grid >= 1, "deviation_check: grid must be >= 1");

    DeviationResult out;
    out.n = n;
    out.T = T;
    out.grid = grid;
    out.max_deviation = 0;
    for (int g = 0; g <= grid; ++g) {
        const Rational t = ratio(2 * g - grid, grid);
        Rational dev = abs(p_eval(n, T, t) - legendre_eval(n, t));
        if (dev > out.max_deviation) out.max_deviation = std::move(dev);
    }
    Integer four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
    out.bound = ratio(3 * four_n, 2 * Integer(T) * T);
    out.holds = out.max_deviation <= out.bound;
    out.tenth_applicable = T >= 90 && below_log(n, T);
    out.tenth_holds = !out.tenth_applicable || out.max_deviation <= Rational(1, 10);
    return out;
}

bool in_middle_range(int s, int T) {
    const long ss = s;
    const long tt = T;
    return 5 * tt * tt <= 100 * ss * ss && 5 * ss <= 4 * tt;
}

Rational lattice_product(int n, int T) {
    Rational p = racah_rescale(n, T);
    return n % 2 == 1 ? Rational(-p) : p;
}

LegendreBoundReport legendre_bound_checks(const LegendreBoundSamples& samples) {
    require(samples.n_max >= 2, "legendre_bound_checks: n_max must be >= 2");
    require(samples.t_grid_denominator >= 10 && samples.t_grid_denominator % 10 == 0,
            "legendre_bound_checks: t-grid denominator must be a positive multiple of 10");
    require(samples.theta_points >= 2, "legendre_bound_checks: need at least two theta points");
    require(samples.middle_T_min >= 10 && samples.middle_T_min <= samples.middle_T_max, "legendre_bound_checks: bad middle-range T range");

    LegendreBoundReport out;

    // exact: |P_n(t)| <= 3/4 on t = g/D, |t| <= 9/10
    out.grid_max_abs = 0;
    const int D = samples.t_grid_denominator;
    for (int g = -9 * D / 10; g <= 9 * D / 10; ++g) {
        const Rational t = ratio(g, D);
        Rational prev = 1;
        Rational cur = t;
        for (int m = 1; m < samples.n_max; ++m) {
            Rational next = (Rational(2 * m + 1) * t * cur - m * prev) / (m + 1);
            prev = std::move(cur);
            cur = std::move(next);
            // cur is P_{m+1}
            Rational mag = abs(cur);
            if (mag > out.grid_max_abs) out.grid_max_abs = std::move(mag);
            ++out.grid_points;
        }
    }
    out.grid_holds = out.grid_max_abs <= Rational(3, 4);

    // float smoke test of sqrt(sin th)|P_n(cos th)| < sqrt(2/(pi n))
    out.theta_max_excess = -1.0;
    for (int j = 0; j < samples.theta_points; ++j) {
        const double theta = std::numbers::pi * j / (samples.theta_points - 1);
        const double x = std::cos(theta);
        const double w = std::sqrt(std::max(0.0, std::sin(theta)));
        double prev = 1.0;
        double cur = x;
        for (int m = 1; m < samples.n_max; ++m) {
            const double next = ((2.0 * m + 1.0) * x * cur - m * prev) / (m + 1.0);
            prev = cur;
            cur = next;
            const int deg = m + 1;
            const double excess = w * std::abs(cur) - std::sqrt(2.0 / (std::numbers::pi * deg));
            out.theta_max_excess = std::max(out.theta_max_excess, excess);
        }
    }
    out.theta_holds = out.theta_max_excess < samples.theta_slack;

    // middle-range lattice nodes satisfy |t| <= 9/10
    out.middle_holds = true;
    for (int T = samples.middle_T_min; T <= samples.middle_T_max; ++T) {
        for (int s = 0; s <= T - 1; ++s) {
            if (!in_middle_range(s, T)) continue;
            ++out.middle_points;
            if (abs(node_t(s, T).t) > Rational(9, 10)) out.middle_holds = false;
        }
    }

    // prod (T^2 - i^2)/T^2 > 40/41 for T >= 90, n < log T
    out.product_holds = true;
    out.product_min = 1;
    for (int T : samples.product_Ts) {
        require(T >= 90, "legendre_bound_checks: product samples need T >= 90");
        for (int n = 0; below_log(n, T); ++n) {
            ++out.product_points;
            Rational p = lattice_product(n, T);
            if (!(p > Rational(40, 41))) out.product_holds = false;
            if (p < out.product_min) out.product_min = std::move(p);
        }
    }
    return out;
}

std::string to_string(CertBranch b) {
    switch (b) {
        case CertBranch::cauchy: return "cauchy";
        case CertBranch::closed_form: return "closed_form";
        case CertBranch::legendre: return "legendre";
        case CertBranch::uncovered: return "uncovered";
    }
    return "uncovered";
}

bool CertReport::all_certified() const {
    return std::all_of(rows.begin(), rows.end(), [](const CertRow& r) {
        return r.branch != CertBranch::uncovered && r.branch_ok;
    });
}

bool CertReport::all_hold() const {
    return std::all_of(rows.begin(), rows.end(), [](const CertRow& r) { return r.needed.holds; });
}

namespace {

bool closed_form_branch_ok(int n, int T) {
    for (int s = 0; s <= T - 1; ++s) {
        const Rational r = racah_eval(n, s, T);
        const int c = cmp(abs(r), 1);
        if (c > 0) return false;
        if (c == 0 && n > 0 && s > 0) return false;
        if (n == T - 1 && r != closed_form_last(s, T)) return false;
    }
    return true;
}

bool legendre_branch_ok(int n, int T) {
    if (!(lattice_product(n, T) > Rational(40, 41))) return false;
    const Rational tenth(1, 10);
    for (int s = 0; s <= T - 1; ++s) {
        const Rational t = node_t(s, T).t;
        const Rational P = legendre_eval(n, t);
        if (abs(p_eval(n, T, t) - P) > tenth) return false;
        if (abs(P) > 1) return false;
        if (n >= 2 && in_middle_range(s, T) && abs(P) > Rational(3, 4)) return false;
    }
    return true;
}

}  // namespace

CertReport certify_needed(std::span<const Rational> seq, int T) {
    require(T >= 3, "certify_needed: T must be >= 3");
    require(seq.size() >= static_cast<std::size_t>(T - 1), "certify_needed: sequence too short");
    require(validate_concave(seq), "certify_needed: sequence is not concave increasing");

    CertReport report;
    report.T = T;
    for (int n = 0; n <= T - 1; ++n) {
        CertRow row;
        row.n = n;
        row.needed = needed_inequality(seq, n, T);
        if (cauchy_sufficient(seq, n, T).holds) {
            row.branch = CertBranch::cauchy;
            row.branch_ok = true;
        } else if (n <= 3 || n == T - 1) {
            row.branch = CertBranch::closed_form;
            row.branch_ok = closed_form_branch_ok(n, T);
        } else if (T >= 90 && below_log(n, T)) {
            row.branch = CertBranch::legendre;
            row.branch_ok = legendre_branch_ok(n, T);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

nlohmann::ordered_json to_json(const NeededVerdict& v) {
    return {{"n", v.n},
            {"T", v.T},
            {"lhs", to_string(v.lhs)},
            {"rhs", to_string(v.rhs)},
            {"lhs_approx", to_decimal(v.lhs)},
            {"rhs_approx", to_decimal(v.rhs)},
            {"holds", v.holds}};
}

}  // namespace arithgrass
