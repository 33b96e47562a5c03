#include "arithgrass/cli.hpp"

#include "arithgrass/chowring.hpp"
#include "arithgrass/parallel.hpp"
#include "arithgrass/racah.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace arithgrass::cli {

std::string to_string(Command c) {
    switch (c) {
        case Command::verify_grassmannian: return "verify-grassmannian";
        case Command::verify_pn: return "verify-pn";
        case Command::verify_ortho: return "verify-ortho";
        case Command::verify_needed: return "verify-needed";
        case Command::scan_bound: return "scan-bound";
        case Command::sigma: return "sigma";
        case Command::table: return "table";
    }
    return "sigma";
}

namespace {

void usage_check(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

std::pair<int, int> t_range(const RunConfig& c) {
    return c.T > 0 ? std::pair{c.T, c.T} : std::pair{c.T_min, c.T_max};
}

void validate_t_range(const RunConfig& c) {
    const auto [lo, hi] = t_range(c);
    usage_check(lo >= 3, "T must be >= 3");
    usage_check(lo <= hi, "empty T range: Tmin > Tmax");
}

// Rows are produced into a vector indexed by parameter point, so the output
// order is fixed by the sort key no matter which worker finishes first.
struct RowResult {
    std::vector<std::string> cells;
    bool passed = true;
};

int finish(Table& table, std::vector<RowResult>& rows, const RunConfig& c, std::ostream& out) {
    if (c.inject_failure && !rows.empty()) rows.front().passed = !rows.front().passed;
    bool all = true;
    for (auto& r : rows) {
        all = all && r.passed;
        r.cells.push_back(cell(r.passed));
        table.add_row(std::move(r.cells));
    }
    emit_table(table, c.format, out);
    return all ? 0 : 1;
}

std::vector<Column> concat(std::initializer_list<std::vector<Column>> parts) {
    std::vector<Column> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

void append(std::vector<std::string>& row, const std::vector<std::string>& more) {
    row.insert(row.end(), more.begin(), more.end());
}

std::vector<SigmaInstance> instances(int N_lo, int N_hi, const std::vector<int>& k_set) {
    std::vector<SigmaInstance> out;
    for (int N = N_lo; N <= N_hi; ++N) {
        for (int k = 0; 2 * k <= N; ++k) {
            if (!k_set.empty() && std::find(k_set.begin(), k_set.end(), k) == k_set.end()) continue;
            out.push_back(SigmaInstance::make(N, k));
        }
    }
    return out;
}

std::vector<Column> sigma_columns() {
    return concat({{int_col("N"), int_col("k"), int_col("n"), int_col("T")},
                   rational_columns("sigma"),
                   {bool_col("positive"), text_col("method"), bool_col("agree")}});
}

std::vector<std::string> sigma_cells(const SigmaVerdict& v) {
    std::vector<std::string> row{cell(v.inst.N), cell(v.inst.k), cell(v.inst.n()), cell(v.inst.T())};
    append(row, rational_cells(v.sigma));
    append(row, {cell(v.positive), to_string(v.method), cell(v.agree)});
    return row;
}

// L^{2n+1} alpha_k = 0 while L^{2n} alpha_k != 0
bool alpha_is_primitive(SigmaInstance inst) {
    const auto a = alpha(inst.N, inst.k);
    const auto top = lefschetz_power(a, 2 * inst.n());
    return !top.is_zero() && pieri_step(top).is_zero();
}

bool profile_ok(const PrimitiveProfile& prof) {
    if (!prof.primcond) return false;
    for (int p = 0; p <= prof.N; ++p) {
        const int want = p % 2 == 0 ? 1 : 0;
        if (prof.dims[p] != want) return false;
    }
    return true;
}

int run_sigma_like(const RunConfig& c, std::vector<SigmaInstance> points, bool structural, std::ostream& out) {
    auto cols = sigma_columns();
    if (structural) {
        cols.push_back(bool_col("primcond"));
        cols.push_back(bool_col("alpha_primitive"));
    }
    cols.push_back(bool_col("passed"));
    Table table(cols);

    std::vector<RowResult> rows(points.size());
    std::vector<std::optional<bool>> profile_cache(points.empty() ? 0 : points.back().N + 1);
    if (structural) {
        // one profile per N, computed up front so workers only read it
        for (const auto& p : points) {
            if (!profile_cache[p.N]) profile_cache[p.N] = profile_ok(primitive_profile(p.N));
        }
    }
    parallel_for(points.size(), c.workers, [&](std::size_t i) {
        const auto v = evaluate_sigma(points[i], c.method);
        rows[i].cells = sigma_cells(v);
        rows[i].passed = v.passed();
        if (structural) {
            const bool prim = *profile_cache[points[i].N];
            const bool alpha_ok = alpha_is_primitive(points[i]);
            rows[i].cells.push_back(cell(prim));
            rows[i].cells.push_back(cell(alpha_ok));
            rows[i].passed = rows[i].passed && prim && alpha_ok;
        }
    });
    return finish(table, rows, c, out);
}

int run_verify_pn(const RunConfig& c, std::ostream& out) {
    Table table(concat({{int_col("n")}, rational_columns("tau"), {bool_col("commutator")},
                        rational_columns("sigma"), {bool_col("passed")}}));
    std::vector<RowResult> rows(static_cast<std::size_t>(c.n_max));
    parallel_for(rows.size(), c.workers, [&](std::size_t i) {
        const int n = static_cast<int>(i) + 1;
        const Rational tau = pn_tau(n);
        const bool comm = pn_commutator_check(n);
        const Rational sig = pn_sigma(n);
        std::vector<std::string> row{cell(n)};
        append(row, rational_cells(tau));
        row.push_back(cell(comm));
        append(row, rational_cells(sig));
        rows[i] = {std::move(row), comm && sgn(tau) > 0 && sig == tau};
    });
    return finish(table, rows, c, out);
}

int run_verify_ortho(const RunConfig& c, std::ostream& out) {
    const auto [lo, hi] = t_range(c);
    struct Point {
        int T, n, m;
    };
    std::vector<Point> points;
    for (int T = lo; T <= hi; ++T) {
        for (int n = 0; n < T; ++n) {
            for (int m = 0; m < T; ++m) points.push_back({T, n, m});
        }
    }
    Table table(concat({{int_col("T"), int_col("n"), int_col("m")}, rational_columns("sum"),
                        {text_col("expected"), bool_col("passed")}}));
    std::vector<RowResult> rows(points.size());
    parallel_for(points.size(), c.workers, [&](std::size_t i) {
        const auto [T, n, m] = points[i];
        const auto r = orthogonality_check(T, n, m);
        std::vector<std::string> row{cell(T), cell(n), cell(m)};
        append(row, rational_cells(r.sum));
        row.push_back(arithgrass::to_string(r.expected));
        rows[i] = {std::move(row), r.holds};
    });
    return finish(table, rows, c, out);
}

struct LabelledSequence {
    std::string label;
    std::vector<Rational> values;
    bool concave = false;
};

int run_verify_needed(const RunConfig& c, std::ostream& out) {
    const auto [lo, hi] = t_range(c);
    struct Job {
        int T;
        LabelledSequence seq;
    };
    std::vector<Job> jobs;
    if (c.sequence == "harmonic") {
        for (int T = lo; T <= hi; ++T) {
            const auto h = ConcaveSequence::harmonic(static_cast<std::size_t>(T - 1));
            jobs.push_back({T, {"harmonic", {h.values().begin(), h.values().end()}, true}});
        }
    } else if (c.sequence == "random") {
        for (int T = lo; T <= hi; ++T) {
            for (int j = 0; j < c.count; ++j) {
                const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(T) * 1000003ULL + j;
                const auto r = random_concave(static_cast<std::size_t>(T - 1), seed);
                jobs.push_back({T, {"random:" + std::to_string(seed), {r.values().begin(), r.values().end()}, true}});
            }
        }
    } else {
        const auto values = read_sequence_file(c.sequence);
        usage_check(values.size() >= static_cast<std::size_t>(hi - 1),
                    "sequence file has " + std::to_string(values.size()) + " values, T=" + std::to_string(hi) +
                        " needs " + std::to_string(hi - 1));
        const bool concave = validate_concave(values);
        for (int T = lo; T <= hi; ++T) jobs.push_back({T, {"file:" + c.sequence, values, concave}});
    }

    Table table(concat({{text_col("sequence"), bool_col("concave"), int_col("T"), int_col("n")},
                        rational_columns("lhs"), rational_columns("rhs"),
                        {bool_col("holds"), text_col("branch"), bool_col("branch_ok"), bool_col("passed")}}));

    std::vector<std::vector<RowResult>> per_job(jobs.size());
    parallel_for(jobs.size(), c.workers, [&](std::size_t j) {
        const auto& job = jobs[j];
        std::optional<CertReport> certified;
        if (job.seq.concave) certified = certify_needed(job.seq.values, job.T);
        for (int n = 0; n < job.T; ++n) {
            const auto v = certified ? certified->rows[n].needed : needed_inequality(job.seq.values, n, job.T);
            std::vector<std::string> row{job.seq.label, cell(job.seq.concave), cell(job.T), cell(n)};
            append(row, rational_cells(v.lhs));
            append(row, rational_cells(v.rhs));
            row.push_back(cell(v.holds));
            bool ok = v.holds;
            if (certified) {
                const auto& r = certified->rows[n];
                row.push_back(to_string(r.branch));
                row.push_back(cell(r.branch_ok));
                ok = ok && r.branch != CertBranch::uncovered && r.branch_ok;
            } else {
                row.push_back("exploratory");
                row.push_back(cell(false));
            }
            per_job[j].push_back({std::move(row), ok});
        }
    });
    std::vector<RowResult> rows;
    for (auto& job_rows : per_job) {
        for (auto& r : job_rows) rows.push_back(std::move(r));
    }
    return finish(table, rows, c, out);
}

int run_scan_bound(const RunConfig& c, std::ostream& out) {
    auto report = bound_scan(c.T_min, c.T_max, c.workers);
    if (!c.timing) report.elapsed_ms = 0;
    bool passed = report.passed();
    if (c.inject_failure) passed = !passed;
    if (c.format == OutputFormat::json) {
        auto j = to_json(report);
        j["passed"] = passed;
        out << j.dump() << '\n';
    } else {
        Table table(concat({{int_col("T"), int_col("n"), int_col("s"), text_col("kind")}, rational_columns("value")}));
        auto add = [&](const std::vector<RacahPoint>& pts, const std::string& kind) {
            for (const auto& p : pts) {
                std::vector<std::string> row{cell(p.T), cell(p.n), cell(p.s), kind};
                append(row, rational_cells(p.value));
                table.add_row(std::move(row));
            }
        };
        add(report.violations, "violation");
        add(report.strictness_exceptions, "strictness_exception");
        add(report.equality_cases, "equality");
        emit_table(table, c.format, out);
    }
    return passed ? 0 : 1;
}

int run_table(const RunConfig& c, std::ostream& out) {
    if (c.table_kind == "sigma") {
        RunConfig closed = c;
        closed.method = SigmaMethod::closed;
        return run_sigma_like(closed, instances(1, c.N_max, c.k_set), false, out);
    }
    if (c.table_kind == "racah") {
        const auto [lo, hi] = t_range(c);
        struct Point {
            int T, n, s;
        };
        std::vector<Point> points;
        for (int T = lo; T <= hi; ++T) {
            for (int n = 0; n < T; ++n) {
                for (int s = 0; s < T; ++s) points.push_back({T, n, s});
            }
        }
        Table table(concat({{int_col("T"), int_col("n"), int_col("s")}, rational_columns("value"),
                            {bool_col("passed")}}));
        std::vector<RowResult> rows(points.size());
        parallel_for(points.size(), c.workers, [&](std::size_t i) {
            const auto [T, n, s] = points[i];
            const Rational v = racah_eval(n, s, T);
            std::vector<std::string> row{cell(T), cell(n), cell(s)};
            append(row, rational_cells(v));
            rows[i] = {std::move(row), abs(v) <= 1};
        });
        return finish(table, rows, c, out);
    }
    // deviation: every (n, T) in range with 10(1 + 2n + 2n^2) < T^2
    const auto [lo, hi] = t_range(c);
    std::vector<std::pair<int, int>> points;
    for (int T = lo; T <= hi; ++T) {
        for (int n = 0; 10 * (1 + 2 * n + 2 * n * n) < T * T; ++n) points.emplace_back(n, T);
    }
    Table table(concat({{int_col("T"), int_col("n"), int_col("grid")}, rational_columns("max_deviation"),
                        rational_columns("bound"), {bool_col("passed")}}));
    std::vector<RowResult> rows(points.size());
    parallel_for(points.size(), c.workers, [&](std::size_t i) {
        const auto [n, T] = points[i];
        const auto r = deviation_check(n, T, 200);
        std::vector<std::string> row{cell(T), cell(n), cell(r.grid)};
        append(row, rational_cells(r.max_deviation));
        append(row, rational_cells(r.bound));
        rows[i] = {std::move(row), r.holds && r.tenth_holds};
    });
    return finish(table, rows, c, out);
}

}  // namespace

void validate(const RunConfig& c) {
    usage_check(c.workers >= 1, "workers must be >= 1");
    switch (c.command) {
        case Command::sigma:
            usage_check(c.N >= 1, "N must be >= 1");
            usage_check(c.k == -1 || (c.k >= 0 && 2 * c.k <= c.N), "need 0 <= 2k <= N");
            break;
        case Command::verify_grassmannian:
            usage_check(c.N_max >= 1, "Nmax must be >= 1");
            for (int k : c.k_set) usage_check(k >= 0 && 2 * k <= c.N_max, "k out of range for Nmax");
            break;
        case Command::verify_pn:
            usage_check(c.n_max >= 1, "nmax must be >= 1");
            break;
        case Command::verify_ortho:
        case Command::scan_bound:
            validate_t_range(c);
            break;
        case Command::verify_needed:
            validate_t_range(c);
            usage_check(c.sequence != "random" || c.count >= 1, "count must be >= 1");
            break;
        case Command::table:
            usage_check(c.table_kind == "sigma" || c.table_kind == "racah" || c.table_kind == "deviation",
                        "table kind must be sigma, racah or deviation");
            if (c.table_kind == "sigma") {
                usage_check(c.N_max >= 1, "Nmax must be >= 1");
            } else {
                validate_t_range(c);
            }
            break;
    }
}

std::vector<Rational> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open sequence file '" + path + "'");
    std::vector<Rational> values;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Rational v;
        try {
            v = parse_rational(line);
        } catch (const std::invalid_argument& e) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (sgn(v) <= 0) throw UsageError(path + ":" + std::to_string(lineno) + ": value must be positive");
        values.push_back(std::move(v));
    }
    if (values.empty()) throw UsageError("sequence file '" + path + "' is empty");
    return values;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        switch (config.command) {
            case Command::sigma: {
                const auto points = config.k >= 0 ? std::vector{SigmaInstance::make(config.N, config.k)}
                                                  : instances(config.N, config.N, {});
                return run_sigma_like(config, points, false, out);
            }
            case Command::verify_grassmannian:
                return run_sigma_like(config, instances(1, config.N_max, config.k_set), true, out);
            case Command::verify_pn: return run_verify_pn(config, out);
            case Command::verify_ortho: return run_verify_ortho(config, out);
            case Command::verify_needed: return run_verify_needed(config, out);
            case Command::scan_bound: return run_scan_bound(config, out);
            case Command::table: return run_table(config, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the arithmetic Hodge index inequality on G(2,N) and Racah bounds"};
    app.require_subcommand(1);

    RunConfig config;
    config.workers = default_workers();
    std::string format = "json";
    std::string method = "both";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--workers", config.workers, "worker threads (default: $ARITHGRASS_WORKERS or cores)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", config.seed, "RNG seed");
        sub->add_flag("--inject-failure", config.inject_failure, "flip the first verdict (exit code testing)")
            ->group("");
    };
    auto t_options = [&](CLI::App* sub) {
        sub->add_option("--T", config.T, "single T (overrides --Tmin/--Tmax)");
        sub->add_option("--Tmin", config.T_min, "smallest T");
        sub->add_option("--Tmax", config.T_max, "largest T");
    };

    auto* sigma = app.add_subcommand("sigma", "Sigma(N,k) for one N");
    sigma->add_option("--N", config.N, "ambient N")->required();
    sigma->add_option("--k", config.k, "primitive degree p = 2k (default: all)");
    sigma->add_option("--method", method, "direct, closed or both")->check(CLI::IsMember({"direct", "closed", "both"}));
    common(sigma);

    auto* grass = app.add_subcommand("verify-grassmannian", "Sigma > 0, primitivity and (primcond) for N <= Nmax");
    grass->add_option("--Nmax", config.N_max, "largest N");
    grass->add_option("--k", config.k_set, "restrict to these k");
    grass->add_option("--method", method, "direct, closed or both")->check(CLI::IsMember({"direct", "closed", "both"}));
    common(grass);

    auto* pn = app.add_subcommand("verify-pn", "commutator relation on arithmetic P^n, 1 <= n <= nmax");
    pn->add_option("--nmax", config.n_max, "largest n");
    common(pn);

    auto* ortho = app.add_subcommand("verify-ortho", "orthogonality of R_n(s,T)");
    t_options(ortho);
    common(ortho);

    auto* needed = app.add_subcommand("verify-needed", "alternating harmonic-sum inequality for every n");
    t_options(needed);
    needed->add_option("--sequence", config.sequence, "harmonic, random, or a file with one value per line");
    needed->add_option("--count", config.count, "random sequences per T");
    common(needed);

    auto* scan = app.add_subcommand("scan-bound", "search for |R_n(s,T)| > 1");
    scan->add_option("--Tmin", config.T_min, "smallest T");
    scan->add_option("--Tmax", config.T_max, "largest T");
    scan->add_flag("--no-timing", [&](std::int64_t) { config.timing = false; }, "report elapsed_ms as 0");
    common(scan);

    auto* table = app.add_subcommand("table", "plot-ready tables");
    table->add_option("--kind", config.table_kind, "sigma, racah or deviation")
        ->check(CLI::IsMember({"sigma", "racah", "deviation"}));
    table->add_option("--Nmax", config.N_max, "largest N (sigma)");
    t_options(table);
    common(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    const std::pair<CLI::App*, Command> commands[] = {
        {sigma, Command::sigma},         {grass, Command::verify_grassmannian}, {pn, Command::verify_pn},
        {ortho, Command::verify_ortho},  {needed, Command::verify_needed},       {scan, Command::scan_bound},
        {table, Command::table}};
    for (const auto& [sub, cmd] : commands) {
        if (sub->parsed()) config.command = cmd;
    }
    config.format = parse_output_format(format);
    config.method = parse_sigma_method(method);
    return run(config, out, err);
}

}  // namespace arithgrass::cli
