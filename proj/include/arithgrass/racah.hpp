#pragma once

// Racah polynomials R_n(s,T) = 4F3(-n, n+1, -s, s+1; 1, 1+T, 1-T; 1) in
// exact arithmetic, together with the Legendre comparison and the bounds
// that control the alternating harmonic sum
//
//     sum_{s=1}^{T-1} (-1)^{s+1} R_n(s,T) H_s  <  sum_{s=1}^{T-1} H_s.
//
// Everything that decides a pass/fail verdict is exact. The only floating
// point lives in legendre_bound_checks. theta-grid smoke test.

#include "arithgrass/exactmath.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace arithgrass {

struct RacahParams {
    int n = 0;
    int s = 0;
    int T = 3;
};

/// Exact value of the terminating sum
///   sum_{r=0}^{min(n,s)} (-n)_r (n+1)_r (-s)_r (s+1)_r / ((1)_r (1+T)_r (1-T)_r r!).
/// Requires T >= 3, n, s >= 0 and min(n,s) <= T-1 (otherwise (1-T)_r
/// vanishes); throws std::invalid_argument.
Rational racah_eval(int n, int s, int T);
inline Rational racah_eval(RacahParams p) { return racah_eval(p.n, p.s, p.T); }

/// R_n(s,T) == R_s(n,T).
bool racah_symmetry_check(int n, int s, int T);

/// Legendre P_n(t) by the three-term recurrence.
Rational legendre_eval(int n, const Rational& t);

/// The rescaled Racah polynomial p_n(t), defined for every rational t by
///   t p_m = (m+1)/(2m+1) p_{m+1} - (2m^2+2m+1)/(2T^2) p_m
///           + (1 - m^2/T^2)^2 m/(2m+1) p_{m-1},
/// p_0 = 1, p_1 = t + 1/(2T^2).
Rational p_eval(int n, int T, const Rational& t);

/// (-1)^n prod_{i=1}^n (T^2 - i^2)/T^2, the factor with
/// p_n(t_s) = racah_rescale(n,T) * R_n(s,T) at lattice nodes.
Rational racah_rescale(int n, int T);

struct LatticeNode {
    int s = 0;
    int T = 3;
    Rational t;  // (2s+1)^2/(2T^2) - 1

    /// s(s+1) recovered as -1/4 + T^2 (1+t)/2.
    Rational x() const;
};

/// Requires 0 <= s <= T-1.
LatticeNode node_t(int s, int T);

struct OrthogonalityResult {
    Rational sum;       // sum_s (2s+1) R_n(s,T) R_m(s,T)
    Rational expected;  // T^2/(2n+1) if n == m, else 0
    bool holds = false;
};

OrthogonalityResult orthogonality_check(int T, int n, int m);

/// Both sides of the alternating-sum inequality for one (n, T).
struct NeededVerdict {
    int n = 0;
    int T = 3;
    Rational lhs;  // sum_{s=1}^{T-1} (-1)^{s+1} R_n(s,T) H_s
    Rational rhs;  // sum_{s=1}^{T-1} H_s
    bool holds = false;
};

/// seq[s-1] is H_s. Any positive sequence is accepted; concavity is the
/// caller's concern. Throws std::invalid_argument when seq is shorter than
/// T-1 or the parameters are out of range.
NeededVerdict needed_inequality(std::span<const Rational> seq, int n, int T);

struct CauchyResult {
    Rational lhs;  // sum_{s=0}^{T-1} H_s^2/(2s+1)
    Rational rhs;  // (2n+1) ((1/T) sum_{s=0}^{T-1} H_s)^2
    bool holds = false;
};

/// The Cauchy-Schwarz sufficient condition; holds implies the needed
/// inequality for the same (seq, n, T).
CauchyResult cauchy_sufficient(std::span<const Rational> seq, int n, int T);

/// log T < n + 1/2, decided as e^{2n+1} > T^2 with certified bounds on e.
bool goodrange(int n, int T);

/// n < log T, decided as e^n < T.
bool below_log(int n, int T);

/// R_{T-1}(s,T) as prod_{j=1}^s (j-T)/(j+T). Requires 0 <= s <= T-1.
Rational closed_form_last(int s, int T);

struct RacahPoint {
    int T = 0;
    int n = 0;
    int s = 0;
    Rational value;
};

struct ScanReport {
    int T_min = 3;
    int T_max = 3;
    std::vector<RacahPoint> violations;             // |R| > 1
    std::vector<RacahPoint> equality_cases;         // |R| == 1
    std::vector<RacahPoint> strictness_exceptions;  // |R| == 1 with n, s > 0
    std::int64_t rows_checked = 0;                  // (n, T) rows
    std::int64_t points_checked = 0;                // (n, s, T) with n <= s
    std::int64_t elapsed_ms = 0;

    bool passed() const { return violations.empty() && strictness_exceptions.empty(); }
};

/// Scans 0 <= n <= s <= T-1 for T_min <= T <= T_max (symmetry covers s < n)
/// and records every |R_n(s,T)| > 1 and every |R_n(s,T)| = 1. Rows are
/// distributed over `workers` threads; output is sorted by (T, n, s).
ScanReport bound_scan(int T_min, int T_max, unsigned workers = 1);

/// {"T_range":[a,b],"violations":[..],"equality_cases":[{"T":..,"n":..,"s":..}],
///  "strictness_exceptions":[..],"rows_checked":..,"points_checked":..,"elapsed_ms":..}
nlohmann::ordered_json to_json(const ScanReport& r);

struct DeviationResult {
    int n = 0;
    int T = 0;
    int grid = 0;
    Rational max_deviation;  // max over the grid of |p_n(t) - P_n(t)|
    Rational bound;          // (3/2) 4^n / T^2
    bool holds = false;
    bool tenth_applicable = false;  // T >= 90 and n < log T
    bool tenth_holds = true;        // max_deviation <= 1/10 when applicable
};

/// Evaluates p_n and P_n exactly at grid+1 equally spaced points of [-1,1].
/// Requires 1 + 2n + 2n^2 < T^2/10 and grid >= 1.
DeviationResult deviation_check(int n, int T, int grid);

struct LegendreBoundSamples {
    int n_max = 40;                 // exact grid: 2 <= n <= n_max
    int t_grid_denominator = 100;   // t = g/D with |t| <= 9/10; D a multiple of 10
    int theta_points = 10000;       // float smoke test
    double theta_slack = 1e-9;
    int middle_T_min = 10;          // middle range: all T in [middle_T_min, middle_T_max]
    int middle_T_max = 200;
    std::vector<int> product_Ts{90, 91, 100, 150, 200, 500, 1000, 5000};  // lattice product samples
};

struct LegendreBoundReport {
    Rational grid_max_abs;  // max |P_n(t)| over the exact grid
    bool grid_holds = false;
    std::int64_t grid_points = 0;
    double theta_max_excess = 0;  // max sqrt(sin th)|P_n(cos th)| - sqrt(2/(pi n))
    bool theta_holds = false;
    bool middle_holds = false;
    std::int64_t middle_points = 0;
    Rational product_min;  // min prod (T^2 - i^2)/T^2 over samples
    bool product_holds = false;
    std::int64_t product_points = 0;

    bool passed() const { return grid_holds && theta_holds && middle_holds && product_holds; }
};

/// The middle-range lattice condition: sqrt(5)/10 <= s/T <= 4/5, as
/// 5T^2 <= 100 s^2 and 5s <= 4T.
bool in_middle_range(int s, int T);

/// prod_{i=1}^n (T^2 - i^2) / T^{2n}.
Rational lattice_product(int n, int T);

LegendreBoundReport legendre_bound_checks(const LegendreBoundSamples& samples);

enum class CertBranch { cauchy, closed_form, legendre, uncovered };

std::string to_string(CertBranch b);

struct CertRow {
    int n = 0;
    CertBranch branch = CertBranch::uncovered;
    bool branch_ok = false;  // the branch's own ingredient checks passed
    NeededVerdict needed;    // direct exact evaluation
};

struct CertReport {
    int T = 0;
    std::vector<CertRow> rows;

    bool all_certified() const;
    bool all_hold() const;
};

/// For each 0 <= n <= T-1 picks the first applicable certifying branch
/// (Cauchy condition, closed forms for n <= 3 or n = T-1, Legendre
/// comparison for T >= 90 and n < log T), checks its ingredients exactly,
/// and independently evaluates the inequality itself.
/// Throws std::invalid_argument unless seq is concave increasing of length
/// >= T-1.
CertReport certify_needed(std::span<const Rational> seq, int T);

nlohmann::ordered_json to_json(const NeededVerdict& v);

}  // namespace arithgrass
