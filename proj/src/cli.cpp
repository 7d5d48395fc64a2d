#include "supercong/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "supercong/congruences.hpp"
#include "supercong/oracle.hpp"
#include "supercong/sweep.hpp"

namespace supercong::cli {

namespace {

enum class LogLevel { Quiet, Info, Debug };

LogLevel log_level_from_env() {
    const char* raw = std::getenv("SUPERCONG_LOG");
    if (raw == nullptr || std::string_view(raw).empty()) return LogLevel::Info;
    const std::string_view v(raw);
    if (v == "quiet") return LogLevel::Quiet;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    throw Error(ErrorKind::ParseError, "SUPERCONG_LOG must be quiet, info or debug, got '" + std::string(v) + "'");
}

// Workers log concurrently, so every write takes the lock.
class Log {
public:
    Log(LogLevel level, std::ostream& err) : level_(level), err_(err) {}
    void info(const std::string& msg) const {
        if (level_ != LogLevel::Quiet) write(msg);
    }
    void debug(const std::string& msg) const {
        if (level_ == LogLevel::Debug) write("[debug] " + msg);
    }
    // Shown at every level, including quiet.
    void alert(const std::string& msg) const { write(msg); }

private:
    void write(const std::string& line) const {
        std::lock_guard lock(mutex_);
        err_ << line << '\n';
    }

    LogLevel level_;
    std::ostream& err_;
    mutable std::mutex mutex_;
};

struct CommonOptions {
    std::string primes = "5..97";
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string out_path;
    std::string csv_path;
};

struct CheckOptions {
    std::string theorem;
    std::optional<std::string> a, x, m, u;
    bool exhaustive = false;
};

// Inadmissible parameter at one prime: skip it rather than abort the sweep.
bool is_skippable(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPIntegral:
        case ErrorKind::ZeroM:
        case ErrorKind::ExcludedU:
        case ErrorKind::PrimeTooSmall:
        case ErrorKind::WrongResidueClass: return true;
        default: return false;
    }
}

struct SweepStats {
    std::atomic<std::size_t> skipped{0};
};

void write_reports(const std::vector<CheckReport>& reports, const CommonOptions& opts, std::ostream& out) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!opts.out_path.empty()) {
        file.open(opts.out_path);
        if (!file) throw Error(ErrorKind::ParseError, "cannot open " + opts.out_path);
        sink = &file;
    }
    for (const auto& r : reports) *sink << to_json(r).dump() << '\n';

    if (!opts.csv_path.empty()) {
        std::ofstream csv(opts.csv_path);
        if (!csv) throw Error(ErrorKind::ParseError, "cannot open " + opts.csv_path);
        csv << csv_header() << '\n';
        for (const auto& r : reports) csv << to_csv_row(r) << '\n';
    }
}

std::optional<Rational> parse_opt(const std::optional<std::string>& s) {
    if (!s) return std::nullopt;
    return Rational::parse(*s);
}

std::vector<Rational> integers_from(u64 lo, u64 hi_exclusive) {
    std::vector<Rational> out;
    for (u64 v = lo; v < hi_exclusive; ++v) out.emplace_back(static_cast<std::int64_t>(v));
    return out;
}

// Values for one parameter at prime p: the fixed value, or 0..p-1 (1..p-1
// when `nonzero`) under --exhaustive-am.
std::vector<Rational> values_for(const std::optional<Rational>& fixed, bool exhaustive, bool nonzero, u64 p,
                                 const char* name) {
    if (fixed) return {*fixed};
    if (!exhaustive) throw Error(ErrorKind::ParseError, std::string("--") + name + " is required without --exhaustive-am");
    return integers_from(nonzero ? 1 : 0, p);
}

using PrimeChecker = std::function<std::vector<CheckReport>(u64)>;

PrimeChecker make_checker(const CheckOptions& opts, SweepStats& stats, const Log& log) {
    const auto a = parse_opt(opts.a);
    const auto x = parse_opt(opts.x);
    const auto m = parse_opt(opts.m);
    const auto u = parse_opt(opts.u);
    const bool ex = opts.exhaustive;
    const std::string& id = opts.theorem;

    // Runs one instance, turning inadmissible parameters into skips.
    auto attempt = [&stats, &log, id](u64 p, auto&& body) {
        try {
            body();
        } catch (const Error& err) {
            if (!is_skippable(err.kind())) throw;
            ++stats.skipped;
            log.debug(id + " p=" + std::to_string(p) + " skipped: " + err.what());
        }
    };

    // Validate the parameter set once, before any sweep starts.
    auto require = [&](bool needs_a, bool needs_x, bool needs_m, bool needs_u) {
        if (ex) return;
        if ((needs_a && !a) || (needs_x && !x) || (needs_m && !m) || (needs_u && !u)) {
            throw Error(ErrorKind::ParseError, id + " needs its parameters or --exhaustive-am");
        }
    };

    if (id == "thm2.1" || id == "thm2.2") {
        require(true, true, false, false);
        const unsigned e = id == "thm2.1" ? 1 : 2;
        return [=](u64 p) {
            std::vector<CheckReport> out;
            const auto ctx = make_context(p, e);
            for (const auto& av : values_for(a, ex, false, p, "a")) {
                for (const auto& xv : values_for(x, ex, false, p, "x")) {
                    attempt(p, [&] {
                        out.push_back(e == 1 ? check_theorem_2_1(av, xv, *ctx) : check_theorem_2_2(av, xv, *ctx));
                    });
                }
            }
            return out;
        };
    }
    if (id == "thm2.3") {
        require(true, false, true, false);
        return [=](u64 p) {
            std::vector<CheckReport> out;
            const auto ctx = make_context(p, 2);
            for (const auto& av : values_for(a, ex, false, p, "a")) {
                for (const auto& mv : values_for(m, ex, true, p, "m")) {
                    attempt(p, [&] { out.push_back(check_theorem_2_3(av, mv, *ctx)); });
                }
            }
            return out;
        };
    }
    if (id == "thm2.4i" || id == "thm2.4ii") {
        require(false, false, false, true);
        const Part part = id == "thm2.4i" ? Part::I : Part::II;
        return [=](u64 p) {
            std::vector<CheckReport> out;
            const auto ctx = make_context(p, 2);
            for (const auto& uv : values_for(u, ex, false, p, "u")) {
                attempt(p, [&] { out.push_back(check_theorem_2_4(part, uv, *ctx)); });
            }
            return out;
        };
    }
    if (id == "cor2.2" || id == "eq1.3") {
        require(false, false, true, false);
        const bool cor = id == "cor2.2";
        return [=](u64 p) {
            std::vector<CheckReport> out;
            const auto ctx = make_context(p, 2);
            for (const auto& mv : values_for(m, ex, true, p, "m")) {
                attempt(p, [&] {
                    if (cor) {
                        for (auto& r : check_corollary_2_2(mv, *ctx)) out.push_back(std::move(r));
                    } else {
                        out.push_back(check_identity_1_3(mv, *ctx));
                    }
                });
            }
            return out;
        };
    }
    if (id == "cor2.3" || id == "eq1.2") {
        const bool cor = id == "cor2.3";
        return [=](u64 p) {
            std::vector<CheckReport> out;
            attempt(p, [&] {
                if (p <= 3) throw Error(ErrorKind::PrimeTooSmall, id + " requires p > 3");
                const auto ctx = make_context(p, 2);
                if (cor) {
                    auto [first, second] = check_corollary_2_3(*ctx);
                    out.push_back(std::move(first));
                    out.push_back(std::move(second));
                } else {
                    for (auto& r : check_eq_1_2(*ctx)) out.push_back(std::move(r));
                }
            });
            return out;
        };
    }
    throw Error(ErrorKind::ParseError, "unknown theorem '" + id + "'");
}

struct Tally {
    std::size_t verified = 0, vacuous = 0, failed = 0;
};

Tally tally(const std::vector<CheckReport>& reports) {
    Tally t;
    for (const auto& r : reports) {
        switch (r.status) {
            case Status::Verified: ++t.verified; break;
            case Status::Vacuous: ++t.vacuous; break;
            case Status::Failed: ++t.failed; break;
        }
    }
    return t;
}

int cmd_check(const CheckOptions& opts, const CommonOptions& common, std::ostream& out, const Log& log) {
    const auto primes = odd_primes_in(parse_prime_range(common.primes));
    SweepStats stats;
    const PrimeChecker checker = make_checker(opts, stats, log);
    log.debug("checking " + opts.theorem + " over " + std::to_string(primes.size()) + " primes with " +
              std::to_string(common.jobs) + " jobs");
    const auto reports = sweep_primes(primes, common.jobs, checker);
    write_reports(reports, common, out);

    const Tally t = tally(reports);
    for (const auto& r : reports) {
        if (r.status == Status::Failed) log.alert("FAILED " + to_json(r).dump());
    }
    log.info("summary: theorem=" + opts.theorem + " primes=" + std::to_string(primes.size()) +
             " reports=" + std::to_string(reports.size()) + " verified=" + std::to_string(t.verified) +
             " vacuous=" + std::to_string(t.vacuous) + " FAILED=" + std::to_string(t.failed) +
             " skipped=" + std::to_string(stats.skipped.load()));
    return t.failed == 0 ? kOk : kFailed;
}

int cmd_explore(const std::string& conjecture, const CommonOptions& common, std::ostream& out, const Log& log) {
    if (conjecture != "remark2.3") throw Error(ErrorKind::ParseError, "unknown conjecture '" + conjecture + "'");
    std::vector<u64> primes;
    for (u64 p : odd_primes_in(parse_prime_range(common.primes))) {
        if (p % 6 == 5) primes.push_back(p);
    }
    const auto reports = sweep_primes(primes, common.jobs, [](u64 p) {
        return std::vector<CheckReport>{explore_remark_2_3(*make_context(p, 3))};
    });
    write_reports(reports, common, out);

    std::size_t vanishing = 0;
    for (const auto& r : reports) {
        if (r.conclusion_holds) {
            ++vanishing;
        } else {
            log.alert("NON-VANISHING remark2.3 p=" + std::to_string(r.p) + " residue mod p^3 = " +
                      std::to_string(r.residues.front().second));
        }
    }
    log.info("summary: conjecture=remark2.3 primes=" + std::to_string(reports.size()) +
             " vanishing=" + std::to_string(vanishing) + " non_vanishing=" + std::to_string(reports.size() - vanishing));
    return kOk;
}

struct OracleOptions {
    std::string target;
    unsigned n_max = 0;
    unsigned k_max = 200;
    u64 p_max = 97;
    bool n_given = false;
};

int cmd_oracle(const OracleOptions& opts, const Log& log) {
    std::size_t cases = 0;
    auto mismatch = [&](const std::string& what) {
        log.alert("oracle " + opts.target + ": MISMATCH " + what);
        return kFailed;
    };
    if (opts.target == "lemma2.1") {
        const unsigned n_max = opts.n_given ? opts.n_max : 30;
        for (unsigned n = 0; n <= n_max; ++n, ++cases) {
            if (!oracle::lemma_2_1_exact_check(n, n_max)) return mismatch("n=" + std::to_string(n));
        }
    } else if (opts.target == "lemma2.2") {
        const unsigned n_max = opts.n_given ? opts.n_max : 40;
        for (unsigned n = 0; n <= n_max; ++n) {
            auto [s1, s2] = oracle::lemma_2_2_sides(n, n_max);
            ++cases;
            if (!(s1 == s2)) return mismatch("n=" + std::to_string(n) + " S1=" + s1.to_string() + " S2=" + s2.to_string());
            if (n < 2) continue;
            for (int side : {1, 2}) {
                ++cases;
                if (!oracle::zeilberger_certificate_check(n, side, n_max)) {
                    return mismatch("recurrence n=" + std::to_string(n) + " side=" + std::to_string(side));
                }
            }
        }
    } else if (opts.target == "eq1.7") {
        for (unsigned k = 0; k <= opts.k_max; ++k, ++cases) {
            if (!oracle::identity_1_7_check(k, opts.k_max)) return mismatch("k=" + std::to_string(k));
        }
    } else if (opts.target == "reduce-equivalence") {
        const auto result = oracle::reduce_equivalence(opts.p_max);
        cases = result.cases;
        if (result.first_mismatch) return mismatch(*result.first_mismatch);
    } else {
        throw Error(ErrorKind::ParseError, "unknown oracle target '" + opts.target + "'");
    }
    log.info("oracle " + opts.target + ": ok (" + std::to_string(cases) + " cases)");
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Supercongruence verification engine"};
    app.require_subcommand(1);

    CommonOptions common;
    CheckOptions check;
    OracleOptions oracle_opts;
    std::string conjecture;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--primes", common.primes, "inclusive prime range lo..hi")->capture_default_str();
        sub->add_option("--jobs", common.jobs, "parallel workers")->check(CLI::PositiveNumber);
        sub->add_option("--out", common.out_path, "JSONL output file (default: stdout)");
        sub->add_option("--csv", common.csv_path, "optional CSV projection");
    };

    CLI::App* check_cmd = app.add_subcommand("check", "check a theorem over a prime range");
    check_cmd->add_option("theorem", check.theorem, "thm2.1 thm2.2 thm2.3 thm2.4i thm2.4ii cor2.2 cor2.3 eq1.2 eq1.3")
        ->required();
    check_cmd->add_option("--a", check.a, "parameter a as num/den");
    check_cmd->add_option("--x", check.x, "parameter x as num/den");
    check_cmd->add_option("--m", check.m, "parameter m as num/den");
    check_cmd->add_option("--u", check.u, "parameter u as num/den");
    check_cmd->add_flag("--exhaustive-am", check.exhaustive,
                        "sweep every free integer parameter over [0, p-1] (m over [1, p-1])");
    add_common(check_cmd);

    CLI::App* explore_cmd = app.add_subcommand("explore", "record a conjecture over a prime range");
    explore_cmd->add_option("conjecture", conjecture, "remark2.3")->required();
    add_common(explore_cmd);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "run an exact-arithmetic oracle suite");
    oracle_cmd->add_option("target", oracle_opts.target, "lemma2.1 lemma2.2 eq1.7 reduce-equivalence")->required();
    oracle_cmd->add_option("--n-max", oracle_opts.n_max, "largest n for lemma2.1 / lemma2.2");
    oracle_cmd->add_option("--k-max", oracle_opts.k_max, "largest k for eq1.7")->capture_default_str();
    oracle_cmd->add_option("--p-max", oracle_opts.p_max, "largest prime for reduce-equivalence")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }
    oracle_opts.n_given = oracle_cmd->count("--n-max") > 0;

    try {
        const Log log(log_level_from_env(), err);
        if (*check_cmd) return cmd_check(check, common, out, log);
        if (*explore_cmd) return cmd_explore(conjecture, common, out, log);
        return cmd_oracle(oracle_opts, log);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
}

}  // namespace supercong::cli
