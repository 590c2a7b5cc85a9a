// bzeta: exact Bernoulli numbers via four explicit formulas, Stirling and
// Eulerian tables, polylog closed forms, and float quadrature checks of the
// zeta integral representations. Exit codes: 0 success, 1 verification
// failure, 2 usage error.

#include "bzeta/bernoulli.hpp"
#include "bzeta/checks.hpp"
#include "bzeta/polylog.hpp"
#include "bzeta/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace bzeta;
using nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------- bern ----

struct BernOptions {
    int max = 10;
    std::string formula = "all";
    std::string format = "plain";
};

int run_bern(const BernOptions& opt) {
    auto want = [&](const char* f) { return opt.formula == "all" || opt.formula == f; };

    std::vector<BernoulliValue> rows;
    if (want("eq1") || want("eq3")) {
        StirlingTable st(opt.max);
        if (want("eq1"))
            for (int r = 1; r <= opt.max; ++r) rows.push_back(bernoulli_eq1(r, st));
        if (want("eq3"))
            for (int r = 1; r <= opt.max; ++r) rows.push_back(bernoulli_eq3(r, st));
    }
    if (want("eq2") || want("eq4")) {
        EulerianTable et(opt.max);
        if (want("eq2"))
            for (int r = 1; r <= opt.max; ++r) rows.push_back(bernoulli_eq2(r, et));
        if (want("eq4"))
            for (int r = 1; r <= opt.max; ++r) rows.push_back(bernoulli_eq4(r, et));
    }
    if (want("oracle"))
        for (int m = 0; m <= opt.max; ++m) rows.push_back(bernoulli_oracle(m));

    if (opt.format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& bv : rows)
            out.push_back({{"index", bv.index},
                           {"value", bv.value.str()},
                           {"method", method_name(bv.method)}});
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "index,value,method\n";
        for (const auto& bv : rows)
            std::cout << bv.index << "," << bv.value.str() << "," << method_name(bv.method)
                      << "\n";
    } else {
        for (const auto& bv : rows)
            std::cout << "B_" << bv.index << " [" << method_name(bv.method)
                      << "] = " << bv.value.str() << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- tables ----

struct TablesOptions {
    std::string kind;
    int max_row = 10;
    std::string format = "csv";
};

int run_tables(const TablesOptions& opt) {
    const bool stirling = opt.kind == "stirling";
    StirlingTable st(stirling ? opt.max_row : 1);
    EulerianTable et(stirling ? 1 : opt.max_row);

    auto index_range = [&](int r) {
        // Stirling row r holds k = 1..r; Eulerian row r holds j = 0..r-1.
        return stirling ? std::pair<int, int>{1, r} : std::pair<int, int>{0, r - 1};
    };
    auto entry = [&](int r, int i) -> const BigInt& { return stirling ? st(r, i) : et(r, i); };

    if (opt.format == "json") {
        ordered_json out = ordered_json::array();
        for (int r = 1; r <= opt.max_row; ++r) {
            ordered_json row = ordered_json::array();
            auto [lo, hi] = index_range(r);
            for (int i = lo; i <= hi; ++i) row.push_back(entry(r, i).get_str());
            out.push_back(std::move(row));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "row,index,value\n";
        for (int r = 1; r <= opt.max_row; ++r) {
            auto [lo, hi] = index_range(r);
            for (int i = lo; i <= hi; ++i)
                std::cout << r << "," << i << "," << entry(r, i).get_str() << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------- polylog ----

struct PolylogOptions {
    int order = 1;
    std::string form = "both";
    std::string eval;
};

int run_polylog(const PolylogOptions& opt) {
    if (opt.order == 0 && opt.form != "stirling")
        throw std::invalid_argument(
            "the eulerian form requires --order >= 1 (use --form stirling for order 0)");
    StirlingTable st(std::max(opt.order, 1));
    EulerianTable et(std::max(opt.order, 1));
    if (opt.form == "stirling" || opt.form == "both")
        std::cout << "stirling: " << polylog_stirling_form(opt.order, st).str() << "\n";
    if (opt.form == "eulerian" || opt.form == "both")
        std::cout << "eulerian: " << polylog_eulerian_form(opt.order, et).str() << "\n";
    if (!opt.eval.empty()) {
        BigRational x = BigRational::parse(opt.eval);
        std::cout << "value at x = " << x.str() << ": "
                  << polylog_eval_exact(opt.order, x, st).str() << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- verify ----

int run_verify(int max_r) {
    const int R = max_r;
    StirlingTable st(R >= 12 ? R : 12);
    EulerianTable et(R >= 12 ? R : 12);
    const auto seq = bernoulli_sequence(R + 1);

    int failures = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& on_fail) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name;
        if (!ok) {
            std::cout << ": first failure at " << on_fail;
            ++failures;
        }
        std::cout << "\n";
    };
    // Runs pred over r = lo..hi; reports the first failing r.
    auto sweep = [&](const std::string& name, int lo, int hi, auto&& pred) {
        int bad = 0;
        bool ok = true;
        for (int r = lo; r <= hi && ok; ++r)
            if (!pred(r)) {
                ok = false;
                bad = r;
            }
        report(name + " (r = " + std::to_string(lo) + ".." + std::to_string(hi) + ")", ok,
               "r = " + std::to_string(bad));
    };

    sweep("eq1 matches oracle B_{r+1}", 1, R,
          [&](int r) { return bernoulli_eq1(r, st).value == seq[r + 1]; });
    sweep("eq2 matches oracle B_{r+1}", 1, R,
          [&](int r) { return bernoulli_eq2(r, et).value == seq[r + 1]; });
    sweep("eq3 matches oracle B_r", 1, R,
          [&](int r) { return bernoulli_eq3(r, st).value == seq[r]; });
    sweep("eq4 matches oracle B_r", 1, R,
          [&](int r) { return bernoulli_eq4(r, et).value == seq[r]; });

    {
        bool ok = true;
        int bad = 0;
        for (int m = 3; m <= R + 1 && ok; m += 2)
            if (!seq[m].is_zero()) {
                ok = false;
                bad = m;
            }
        report("odd-index Bernoulli numbers vanish (3 <= m <= " + std::to_string(R + 1) + ")", ok,
               "m = " + std::to_string(bad));
    }
    {
        bool ok = true;
        int bad = 0;
        for (int m = 2; m <= R + 1 && ok; m += 2)
            if (seq[m].sign() != ((m / 2) % 2 == 1 ? 1 : -1)) {
                ok = false;
                bad = m;
            }
        report("B_{2m} signs alternate (2 <= 2m <= " + std::to_string(R + 1) + ")", ok,
               "m = " + std::to_string(bad));
    }
    {
        bool ok = true;
        int bad = 0;
        for (int m = 2; m <= R + 1 && ok; m += 2)
            if (!(seq[m] + von_staudt_clausen_correction(m)).is_integer()) {
                ok = false;
                bad = m;
            }
        report("von Staudt-Clausen correction is integral (even m <= " + std::to_string(R + 1) +
                   ")",
               ok, "m = " + std::to_string(bad));
    }

    sweep("stirling and eulerian polylog forms identical", 1, R,
          [&](int r) { return forms_equal(r, st, et); });
    {
        // x d/dx oracle regenerates each closed form from -x/(1+x).
        bool ok = true;
        int bad = 0;
        RationalFunction p = polylog_stirling_form(0, st);
        const int hi = std::min(R, 12);
        for (int r = 1; r <= hi && ok; ++r) {
            p = x_ddx(p);
            if (p != polylog_stirling_form(r, st)) {
                ok = false;
                bad = r;
            }
        }
        report("closed forms match x d/dx oracle (r = 1.." + std::to_string(hi) + ")", ok,
               "r = " + std::to_string(bad));
    }
    sweep("evaluation at x = 1 consistent with eulerian row", 1, R, [&](int r) {
        BigRational alt;
        for (int j = 0; j <= r - 1; ++j) {
            BigRational t{et(r, j)};
            alt += ((r - j) % 2 != 0) ? -t : t;
        }
        return polylog_eval_exact(r, BigRational(1), st) == alt * pow2(-(r + 1));
    });
    {
        // Truncated generating series vs the closed form at x = 1/2; the
        // tail is alternating with decaying terms, so the first omitted
        // term bounds the truncation error.
        bool ok = true;
        int bad = 0;
        const BigRational half(1, 2);
        const int hi = std::min(R, 5);
        for (int r = 1; r <= hi && ok; ++r) {
            const BigRational closed =
                polylog_eval_exact(r, half, st) / (BigRational(1) + half);
            const BigRational err = (harmonic_partial_sum(r, half, 64) - closed).abs();
            const BigRational bound =
                BigRational(generalized_harmonic(65, -r).value) * pow2(-65);
            if (!(err <= bound)) {
                ok = false;
                bad = r;
            }
        }
        report("series truncation at N = 64 within first-omitted-term bound (r = 1.." +
                   std::to_string(hi) + ")",
               ok, "r = " + std::to_string(bad));
    }
    {
        bool ok = true;
        std::string bad;
        const int hi = std::min(R, 20);
        for (int r = 1; r <= hi && ok; ++r)
            for (int n = 1; n <= 100; ++n) {
                auto [lhs, rhs] = faulhaber_check(r, n);
                if (lhs != rhs) {
                    ok = false;
                    bad = "r = " + std::to_string(r) + ", n = " + std::to_string(n);
                    break;
                }
            }
        report("power sums match Bernoulli-polynomial form (r <= " + std::to_string(hi) +
                   ", n <= 100)",
               ok, bad);
    }
    {
        bool ok = true;
        int bad = 0;
        const int hi = std::min(R, 20);
        for (int r = 0; r <= hi && ok; ++r)
            if (hurwitz_zeta_neg_int(r, BigRational(1)) != zeta_neg_int(r)) {
                ok = false;
                bad = r;
            }
        report("hurwitz zeta at a = 1 equals zeta (r = 0.." + std::to_string(hi) + ")", ok,
               "r = " + std::to_string(bad));
    }

    if (failures == 0) {
        std::cout << "all checks passed (max r = " << R << ")\n";
        return 0;
    }
    std::cout << failures << " check(s) failed\n";
    return 1;
}

// ------------------------------------------------------------ quadcheck ----

struct QuadcheckOptions {
    std::string eq = "all";
    int max_r = 8;
    std::string n;
    double tol = 1e-8;
    std::string format = "plain";
};

int run_quadcheck(const QuadcheckOptions& opt) {
    if (!opt.n.empty() && opt.eq != "11")
        throw std::invalid_argument("--n applies to --eq 11 only");

    std::vector<VerificationReport> reports;
    const int cap10 = std::min(opt.max_r, 10);
    const int cap6 = std::min(opt.max_r, 6);
    if (opt.eq == "all") {
        reports = run_suite(opt.max_r, opt.tol);
    } else if (opt.eq == "5") {
        for (int r = 0; r <= cap10; ++r) reports.push_back(verify_eq5(r, opt.tol));
    } else if (opt.eq == "6") {
        reports.push_back(verify_eq5(0, opt.tol));
    } else if (opt.eq == "10") {
        for (int r = 1; r <= cap10; ++r) reports.push_back(verify_eq10(r, opt.tol));
    } else {  // 11
        std::vector<BigRational> grid;
        if (opt.n.empty())
            grid = {BigRational(1, 2), BigRational(1, 3), BigRational(1, 4)};
        else
            grid = {BigRational::parse(opt.n)};
        for (int r = 0; r <= cap6; ++r)
            for (const BigRational& n : grid) reports.push_back(verify_eq11(r, n, opt.tol));
    }

    int failed = 0;
    for (const auto& rep : reports)
        if (!rep.pass) ++failed;

    if (opt.format == "json") {
        // floats serialized at 17 significant digits
        std::string out = "[";
        for (size_t i = 0; i < reports.size(); ++i) {
            const auto& rep = reports[i];
            out += i ? ",\n  {" : "\n  {";
            out += "\"identity\": \"" + identity_name(rep.identity) + "\"";
            out += ", \"r\": " + std::to_string(rep.r);
            if (rep.n) out += ", \"n\": \"" + rep.n->str() + "\"";
            out += ", \"exact_target\": \"" + rep.exact_target.str() + "\"";
            out += ", \"float_factor\": " + fmt17(rep.float_factor);
            out += ", \"target\": " + fmt17(rep.target);
            out += ", \"estimate\": " + fmt17(rep.estimate);
            out += ", \"abs_err\": " + fmt17(rep.abs_err);
            out += ", \"tolerance\": " + fmt17(rep.tolerance);
            out += ", \"evaluations\": " + std::to_string(rep.evaluations);
            out += std::string(", \"converged\": ") + (rep.converged ? "true" : "false");
            out += std::string(", \"pass\": ") + (rep.pass ? "true" : "false");
            out += "}";
        }
        out += "\n]";
        std::cout << out << "\n";
    } else {
        for (const auto& rep : reports) {
            char line[256];
            std::string param = "r=" + std::to_string(rep.r);
            if (rep.n) param += " n=" + rep.n->str();
            std::snprintf(line, sizeof line,
                          "%-4s %-10s target %+.12e  estimate %+.12e  abs_err %.3e  evals %6ld  "
                          "%s%s",
                          identity_name(rep.identity).c_str(), param.c_str(), rep.target,
                          rep.estimate, rep.abs_err, rep.evaluations,
                          rep.pass ? "pass" : "FAIL", rep.converged ? "" : " (not converged)");
            std::cout << line << "\n";
        }
        if (failed == 0)
            std::cout << "all " << reports.size() << " case(s) pass\n";
        else
            std::cout << failed << " of " << reports.size() << " case(s) FAILED\n";
    }
    return failed == 0 ? 0 : 1;
}

// --------------------------------------------------------------- bench ----

struct BenchOptions {
    int max_r = 100;
    int reps = 3;
};

int run_bench(const BenchOptions& opt) {
    using clock = std::chrono::steady_clock;
    const int R = opt.max_r;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    const auto t0 = clock::now();
    StirlingTable st(R);
    EulerianTable et(R);
    const double table_ms = ms_since(t0);

    const auto seq = bernoulli_sequence(R + 1);  // untimed reference

    struct Candidate {
        const char* name;
        const char* range;
        std::function<bool()> check;   // full sweep, compared against oracle
        std::function<void()> sweep;   // same work without the comparison
    };
    const std::vector<Candidate> candidates = {
        {"eq1", "B_2..B_{R+1}",
         [&] {
             for (int r = 1; r <= R; ++r)
                 if (bernoulli_eq1(r, st).value != seq[r + 1]) return false;
             return true;
         },
         [&] {
             for (int r = 1; r <= R; ++r) bernoulli_eq1(r, st);
         }},
        {"eq2", "B_2..B_{R+1}",
         [&] {
             for (int r = 1; r <= R; ++r)
                 if (bernoulli_eq2(r, et).value != seq[r + 1]) return false;
             return true;
         },
         [&] {
             for (int r = 1; r <= R; ++r) bernoulli_eq2(r, et);
         }},
        {"eq3", "B_1..B_R",
         [&] {
             for (int r = 1; r <= R; ++r)
                 if (bernoulli_eq3(r, st).value != seq[r]) return false;
             return true;
         },
         [&] {
             for (int r = 1; r <= R; ++r) bernoulli_eq3(r, st);
         }},
        {"eq4", "B_1..B_R",
         [&] {
             for (int r = 1; r <= R; ++r)
                 if (bernoulli_eq4(r, et).value != seq[r]) return false;
             return true;
         },
         [&] {
             for (int r = 1; r <= R; ++r) bernoulli_eq4(r, et);
         }},
        {"oracle", "B_0..B_R",
         [&] {
             const auto s = bernoulli_sequence(R);
             for (int m = 0; m <= R; ++m)
                 if (s[m] != seq[m]) return false;
             return true;
         },
         [&] { bernoulli_sequence(R); }},
    };

    // A fast wrong formula is meaningless: cross-check before timing.
    for (const auto& c : candidates)
        if (!c.check()) {
            std::cout << "[FAIL] " << c.name << " disagrees with the oracle; not timing\n";
            return 1;
        }

    std::cout << "table build (stirling + eulerian, rows = " << R << "): ";
    std::printf("%.3f ms\n", table_ms);
    for (const auto& c : candidates) {
        std::vector<double> times;
        for (int i = 0; i < opt.reps; ++i) {
            const auto t = clock::now();
            c.sweep();
            times.push_back(ms_since(t));
        }
        std::sort(times.begin(), times.end());
        const size_t mid = times.size() / 2;
        const double median =
            times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
        std::printf("%-6s %-12s median %10.3f ms  (reps = %d, verified against oracle)\n",
                    c.name, c.range, median, opt.reps);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bernoulli formulas, polylog closed forms, and zeta quadrature checks"};
    app.require_subcommand(1);

    BernOptions bern_opt;
    auto* bern = app.add_subcommand("bern", "compute Bernoulli numbers by formula");
    bern->add_option("--max", bern_opt.max, "largest r swept (eq1/eq2 yield B_2..B_{max+1})")
        ->check(CLI::Range(1, 1 << 30))
        ->capture_default_str();
    bern->add_option("--formula", bern_opt.formula, "which route to run")
        ->check(CLI::IsMember({"eq1", "eq2", "eq3", "eq4", "oracle", "all"}))
        ->capture_default_str();
    bern->add_option("--format", bern_opt.format, "output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();

    TablesOptions tables_opt;
    auto* tables = app.add_subcommand("tables", "dump the Stirling or Eulerian triangle");
    tables->add_option("--kind", tables_opt.kind, "which triangle")
        ->check(CLI::IsMember({"stirling", "eulerian"}))
        ->required();
    tables->add_option("--max-row", tables_opt.max_row, "rows to build")
        ->check(CLI::Range(1, 1 << 30))
        ->capture_default_str();
    tables->add_option("--format", tables_opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    PolylogOptions poly_opt;
    auto* poly = app.add_subcommand("polylog", "closed form of Li_{-r}(-x)");
    poly->add_option("--order", poly_opt.order, "polylog order r")
        ->check(CLI::Range(0, 1 << 30))
        ->required();
    poly->add_option("--form", poly_opt.form, "which representation")
        ->check(CLI::IsMember({"stirling", "eulerian", "both"}))
        ->capture_default_str();
    poly->add_option("--eval", poly_opt.eval, "evaluate exactly at rational x (num/den)");

    int verify_max_r = 0;
    auto* verify = app.add_subcommand("verify", "exact invariant suite for all formulas");
    verify->add_option("--max-r", verify_max_r, "sweep formulas up to this r")
        ->check(CLI::Range(1, 1 << 30))
        ->required();

    QuadcheckOptions quad_opt;
    auto* quad = app.add_subcommand("quadcheck", "quadrature checks of the zeta integrals");
    quad->add_option("--eq", quad_opt.eq, "which identity")
        ->check(CLI::IsMember({"5", "6", "10", "11", "all"}))
        ->capture_default_str();
    quad->add_option("--max-r", quad_opt.max_r, "top polylog order")
        ->check(CLI::Range(0, 1 << 30))
        ->capture_default_str();
    quad->add_option("--n", quad_opt.n, "exponent n in (0,1) as num/den (EQ11 only)");
    quad->add_option("--tol", quad_opt.tol, "pass tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    quad->add_option("--format", quad_opt.format, "output format")
        ->check(CLI::IsMember({"plain", "json"}))
        ->capture_default_str();

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "time each formula (verified before timing)");
    bench->add_option("--max-r", bench_opt.max_r, "sweep formulas up to this r")
        ->check(CLI::Range(1, 1 << 30))
        ->capture_default_str();
    bench->add_option("--reps", bench_opt.reps, "repetitions; median reported")
        ->check(CLI::Range(1, 1 << 30))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bern->parsed()) return run_bern(bern_opt);
        if (tables->parsed()) return run_tables(tables_opt);
        if (poly->parsed()) return run_polylog(poly_opt);
        if (verify->parsed()) return run_verify(verify_max_r);
        if (quad->parsed()) return run_quadcheck(quad_opt);
        if (bench->parsed()) return run_bench(bench_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
