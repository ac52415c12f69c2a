#include "qwz/congruences.hpp"
#include "qwz/errors.hpp"
#include "qwz/identities.hpp"
#include "qwz/report.hpp"
#include "qwz/wz.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace qwz {

namespace {

// Configuration problems found after argument parsing (unknown ids, out of
// range samples); reported like parse errors with the usage exit code.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kExitUsage = 64;

// ---- small parsers ------------------------------------------------------

Monom parse_monom(const std::string& text) {
    std::string s = text;
    Monom m{1, 0};
    if (!s.empty() && s[0] == '-') {
        m.sign = -1;
        s.erase(0, 1);
    }
    if (s == "1" && m.sign == 1)
        return m;
    if (s == "q") {
        m.e = 1;
        return m;
    }
    if (s.rfind("q^", 0) == 0) {
        try {
            size_t used = 0;
            m.e = std::stol(s.substr(2), &used);
            if (used == s.size() - 2)
                return m;
        } catch (const std::exception&) {
        }
    }
    throw usage_error("cannot parse substitution \"" + text +
                      "\" (expected 1, q, -q or [-]q^E)");
}

std::string monom_text(const Monom& m) {
    std::string s = m.sign < 0 ? "-" : "";
    if (m.e == 0)
        return m.sign < 0 ? "-1" : "1";
    if (m.e == 1)
        return s + "q";
    return s + "q^" + std::to_string(m.e);
}

Rational parse_q(const std::string& text) {
    Rational q0;
    try {
        q0 = parse_rational(text);
    } catch (const std::exception& e) {
        throw usage_error("cannot parse q sample \"" + text + "\": " +
                          e.what());
    }
    if (abs(q0) >= 1)
        throw usage_error("q sample must satisfy |q| < 1, got " + text);
    return q0;
}

std::string real_text(const Real& x) {
    std::ostringstream out;
    out << std::setprecision(6) << x;
    return out.str();
}

// ---- check battery ------------------------------------------------------

struct Task {
    bool exact = true; // exact tasks may run on pool threads; numeric ones
                       // share the global float precision and stay serial
    std::function<std::vector<CheckRecord>()> run;
};

template <class Fn>
CheckRecord make_record(std::string name, std::string params, Fn&& body) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.params = std::move(params);
    rec.status = "error";
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::pair<bool, std::string> outcome = body();
        rec.status = outcome.first ? "pass" : "fail";
        rec.witness = std::move(outcome.second);
    } catch (const error& e) {
        rec.witness = e.what();
    } catch (const std::exception& e) {
        rec.witness = e.what();
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rec;
}

std::vector<CheckRecord> run_battery(const std::vector<Task>& tasks,
                                     int jobs) {
    std::vector<std::vector<CheckRecord>> slots(tasks.size());
    std::vector<size_t> pooled;
    for (size_t i = 0; i < tasks.size(); ++i) {
        if (jobs > 1 && tasks[i].exact)
            pooled.push_back(i);
        else
            slots[i] = tasks[i].run();
    }
    if (!pooled.empty()) {
        std::atomic<size_t> next{0};
        size_t nthreads =
            std::min<size_t>(static_cast<size_t>(jobs), pooled.size());
        std::vector<std::thread> workers;
        workers.reserve(nthreads);
        for (size_t t = 0; t < nthreads; ++t)
            workers.emplace_back([&] {
                for (size_t j; (j = next.fetch_add(1)) < pooled.size();)
                    slots[pooled[j]] = tasks[pooled[j]].run();
            });
        for (std::thread& w : workers)
            w.join();
    }
    std::vector<CheckRecord> records;
    for (std::vector<CheckRecord>& s : slots)
        for (CheckRecord& r : s)
            records.push_back(std::move(r));
    return records;
}

// ---- task builders ------------------------------------------------------

Task wz_grid_task(const std::string& pair_id, const Monom& a,
                  const std::string& transform, long n_max, long k_max,
                  bool corrupt) {
    return {true, [=]() {
                std::vector<CheckRecord> records;
                WZPair pair = wz_pair(pair_id, a);
                if (transform == "p1")
                    pair = transform_p1(pair);
                else if (transform == "p2")
                    pair = transform_p2(pair);
                else if (transform == "p3")
                    pair = transform_p3(pair);
                else if (transform == "p23")
                    pair = transform_p2p3(pair);
                if (corrupt)
                    pair = corrupt_pair(pair);
                std::string base = "pair=" + pair_id;
                if (!transform.empty())
                    base += " transform=" + transform;
                if (!(a == kAOne))
                    base += " a=" + monom_text(a);
                for (long n = 0; n <= n_max; ++n)
                    for (long k = 0; k <= k_max; ++k)
                        records.push_back(make_record(
                            "wz-residual",
                            base + " n=" + std::to_string(n) +
                                " k=" + std::to_string(k),
                            [&]() -> std::pair<bool, std::string> {
                                ExtTerm r = wz_residual(pair, n, k);
                                if (r.is_zero())
                                    return {true, "residual == 0"};
                                return {false,
                                        "residual " + r.value.str(-1)};
                            }));
                return records;
            }};
}

Task identity_verify_task(const std::string& id, const Monom& a,
                          const Rational& q0, long terms, unsigned precision,
                          long tol_digits, bool corrupt) {
    return {false, [=]() {
                std::string params = "id=" + id + " q=" + to_string(q0) +
                                     " terms=" + std::to_string(terms);
                if (!(a == kAOne))
                    params += " a=" + monom_text(a);
                if (corrupt)
                    params += " corrupt=1";
                std::vector<CheckRecord> records;
                records.push_back(make_record(
                    "identity-residual", params,
                    [&]() -> std::pair<bool, std::string> {
                        Real resid;
                        if (corrupt) {
                            // negative control: shift the exact sum by 1
                            unsigned prev = set_real_precision(precision + 10);
                            Rational lhs =
                                exact_partial_sum(id, a, q0, terms) + 1;
                            Real rhs = eval_infinite_product(
                                identity(id).rhs, a, q0, precision);
                            resid = abs(Real(lhs) - rhs);
                            set_real_precision(prev);
                        } else {
                            resid = verify_numeric(id, a, q0, terms,
                                                   precision);
                        }
                        bool ok = resid < pow(Real(10),
                                              -static_cast<long>(tol_digits));
                        return {ok, "residual " + real_text(resid) +
                                        " (tolerance 1e-" +
                                        std::to_string(tol_digits) + ")"};
                    }));
                return records;
            }};
}

Task identity_limit_task(const std::string& id, long n_max) {
    return {true, [=]() {
                std::vector<CheckRecord> records;
                std::vector<LimitCheck> checks;
                try {
                    checks = verify_limit_terms(id, n_max);
                } catch (const std::exception& e) {
                    CheckRecord rec;
                    rec.name = "identity-limit";
                    rec.params = "id=" + id;
                    rec.status = "error";
                    rec.witness = e.what();
                    records.push_back(std::move(rec));
                    return records;
                }
                for (const LimitCheck& c : checks)
                    records.push_back(make_record(
                        "identity-limit",
                        "id=" + id + " n=" + std::to_string(c.n),
                        [&]() -> std::pair<bool, std::string> {
                            return {c.ok, "q->1 term limit " +
                                              to_string(c.q_limit) +
                                              ", scaled classical term " +
                                              to_string(c.classical_scaled)};
                        }));
                return records;
            }};
}

Task classical_task(const std::string& id, long terms, unsigned precision,
                    long tol_digits) {
    return {false, [=]() {
                std::vector<CheckRecord> records;
                records.push_back(make_record(
                    "classical-value",
                    "id=" + id + " terms=" + std::to_string(terms),
                    [&]() -> std::pair<bool, std::string> {
                        Real resid = classical_value(id, terms, precision);
                        bool ok = resid < pow(Real(10),
                                              -static_cast<long>(tol_digits));
                        return {ok, "residual " + real_text(resid) +
                                        " (tolerance 1e-" +
                                        std::to_string(tol_digits) + ")"};
                    }));
                return records;
            }};
}

std::vector<CheckRecord> congruence_rows(const std::string& name,
                                         const CongruenceResult& result,
                                         double elapsed_each) {
    std::vector<CheckRecord> records;
    if (result.truncations.empty()) {
        CheckRecord rec;
        rec.name = name;
        rec.params = result.params;
        rec.status = to_string(result.status);
        rec.witness = result.witness;
        rec.elapsed_ms = elapsed_each;
        records.push_back(std::move(rec));
        return records;
    }
    for (const TruncationOutcome& t : result.truncations) {
        CheckRecord rec;
        rec.name = name;
        rec.params = result.params + " upper=" + std::to_string(t.upper);
        rec.status = t.claimed_ok ? "pass" : "fail";
        std::ostringstream wit;
        wit << t.detail;
        if (t.phi_multiplicity >= 0)
            wit << "; Phi-multiplicity " << t.phi_multiplicity
                << "; weakened modulus "
                << (t.weak_ok ? "holds" : "fails");
        rec.witness = wit.str();
        rec.elapsed_ms = elapsed_each;
        records.push_back(std::move(rec));
    }
    return records;
}

template <class Fn>
Task congruence_task(const std::string& name, Fn&& check) {
    return {true, [name, check]() {
                auto t0 = std::chrono::steady_clock::now();
                CongruenceResult result = check();
                double elapsed = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
                return congruence_rows(
                    name, result,
                    elapsed / std::max<size_t>(1,
                                               result.truncations.size()));
            }};
}

Task terminating_task(const std::string& id, long m) {
    return {true, [=]() {
                std::vector<CheckRecord> records;
                records.push_back(make_record(
                    "terminating-evaluation",
                    "id=" + id + " m=" + std::to_string(m),
                    [&]() -> std::pair<bool, std::string> {
                        CongruenceResult r =
                            terminating_evaluation_check(id, m);
                        if (r.status == CheckStatus::error)
                            throw error(r.witness);
                        return {r.ok(), r.witness};
                    }));
                return records;
            }};
}

Task cyclo_task(const std::string& id, long m, long upper) {
    return {true, [=]() {
                std::vector<CheckRecord> records;
                records.push_back(make_record(
                    "cyclotomic-congruence",
                    "id=" + id + " m=" + std::to_string(m) +
                        " upper=" + std::to_string(upper),
                    [&]() -> std::pair<bool, std::string> {
                        CongruenceResult r =
                            cyclotomic_congruence_check(id, m, upper);
                        if (r.status == CheckStatus::error)
                            throw error(r.witness);
                        return {r.ok(), r.witness};
                    }));
                return records;
            }};
}

// ---- argument handling --------------------------------------------------

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    unsigned precision = 30;
    int jobs = 1;
};

unsigned env_precision() {
    const char* env = std::getenv("QWZ_PRECISION");
    if (env == nullptr)
        return 30;
    try {
        size_t used = 0;
        long v = std::stol(env, &used);
        if (used == std::strlen(env) && v >= 10 && v <= 100000)
            return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw usage_error(std::string("QWZ_PRECISION must be an integer >= 10, "
                                  "got \"") +
                      env + "\"");
}

void add_common(CLI::App* cmd, CommonOpts* opts) {
    cmd->add_option("--format", opts->format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts->out_path,
                    "write the report to this path instead of stdout");
    cmd->add_option("--precision", opts->precision,
                    "decimal digits for numeric checks (>= 10)");
    cmd->add_option("--jobs", opts->jobs,
                    "worker threads for exact checks")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
}

void validate_common(const CommonOpts& opts) {
    if (opts.precision < 10)
        throw usage_error("--precision must be at least 10");
}

void require_identity(const std::string& id) {
    const std::vector<std::string>& ids = identity_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw usage_error("unknown identity \"" + id + "\"");
}

void require_wz_pair(const std::string& id) {
    const std::vector<std::string>& ids = wz_pair_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw usage_error("unknown pair \"" + id + "\"");
}

using Config = std::vector<std::pair<std::string, std::string>>;

void push_common(Config& config, const CommonOpts& opts) {
    config.emplace_back("precision", std::to_string(opts.precision));
    config.emplace_back("jobs", std::to_string(opts.jobs));
    config.emplace_back("format", opts.format);
}

// default m/p grids of the congruence suites
const std::vector<long> kTheorem1M = {3, 5, 7, 9, 15};
const std::vector<long> kTheorem2M = {5, 7, 11, 13};
const std::vector<long> kLevel1P = {3, 5, 7, 11, 13};
const std::vector<long> kLevel2P = {5, 7, 11, 13};
const std::vector<long> kTerminating1M = {1, 3, 5, 7, 9};
const std::vector<long> kTerminating2M = {1, 5, 7, 11};

void add_qtheorem_tasks(std::vector<Task>& tasks, int which,
                        const std::vector<long>& ms, bool strong) {
    for (long m : ms) {
        if (which == 1)
            tasks.push_back(congruence_task(
                "qtheorem1", [m]() { return theorem1_check(m); }));
        else
            tasks.push_back(congruence_task("qtheorem2", [m, strong]() {
                return theorem2_check(m, strong);
            }));
    }
}

void add_super_tasks(std::vector<Task>& tasks, int which,
                     const std::vector<long>& ps) {
    if (which == 1) {
        auto rhs = level1_super_rhs(ps);
        for (long p : ps)
            tasks.push_back(congruence_task("supercongruence", [p, rhs]() {
                return supercongruence_check("rama-level1", p, 3, rhs);
            }));
    } else {
        auto rhs = level2_super_rhs(ps);
        for (long p : ps)
            tasks.push_back(congruence_task("supercongruence", [p, rhs]() {
                return supercongruence_check("rama-level2-28n3", p, 2, rhs);
            }));
    }
}

void validate_theorem_m(int which, const std::vector<long>& ms) {
    for (long m : ms) {
        if (which == 1 && (m <= 1 || m % 2 == 0))
            throw usage_error("qtheorem 1 needs odd m > 1, got " +
                              std::to_string(m));
        if (which == 2 && (m <= 1 || m % 2 == 0 || m % 3 == 0))
            throw usage_error("qtheorem 2 needs m > 1 coprime to 6, got " +
                              std::to_string(m));
    }
}

void validate_primes(const std::vector<long>& ps) {
    for (long p : ps)
        if (!is_prime(BigInt(p)))
            throw usage_error("p list must contain primes, got " +
                              std::to_string(p));
}

// the full standard battery behind `qwz report --all`
std::vector<Task> build_all_battery(const CommonOpts& opts, long grid) {
    std::vector<Task> tasks;
    for (const std::string& id : wz_pair_ids()) {
        Monom a = (id == "guo-a") ? Monom{1, 3}
                  : (id == "pair7-q-a") ? Monom{-1, 1}
                                        : kAOne;
        tasks.push_back(wz_grid_task(id, a, "", grid, grid, false));
        for (const char* tr : {"p1", "p3", "p23"})
            tasks.push_back(wz_grid_task(id, a, tr, grid, grid, false));
    }
    const Rational half = Rational(1) / 2;
    for (const char* id :
         {"rama1-q", "new-level1-q", "guo-zud-8n1-q", "28n3-q"})
        tasks.push_back(identity_verify_task(id, kAOne, half, 40,
                                             opts.precision, 20, false));
    for (const Monom& a : {Monom{1, 0}, Monom{1, 1}, Monom{1, 3}})
        tasks.push_back(identity_verify_task("level1-q-a", a, half, 40,
                                             opts.precision, 20, false));
    for (const Monom& a : {Monom{1, 0}, Monom{-1, 1}})
        tasks.push_back(identity_verify_task("28n3-q-a", a, half, 40,
                                             opts.precision, 20, false));
    for (const char* id :
         {"rama1-q", "new-level1-q", "28n3-q", "guo-zud-8n1-q"})
        tasks.push_back(identity_limit_task(id, 15));
    tasks.push_back(classical_task("rama-level4", 60, opts.precision, 15));
    tasks.push_back(classical_task("rama-level1", 60, opts.precision, 15));
    tasks.push_back(classical_task("rama-level2-8n1", 80, opts.precision, 15));
    tasks.push_back(
        classical_task("rama-level2-28n3", 80, opts.precision, 15));
    for (long m : kTerminating1M)
        tasks.push_back(terminating_task("level1-q-a", m));
    for (long m : kTerminating2M)
        tasks.push_back(terminating_task("28n3-q-a", m));
    for (long m : kTheorem1M)
        for (long upper : {(m - 1) / 2, m - 1})
            tasks.push_back(cyclo_task("new-level1-q.cong", m, upper));
    add_qtheorem_tasks(tasks, 1, kTheorem1M, false);
    add_qtheorem_tasks(tasks, 2, kTheorem2M, false);
    add_super_tasks(tasks, 1, kLevel1P);
    add_super_tasks(tasks, 2, kLevel2P);
    return tasks;
}

int finish(const Config& config, std::vector<Task> tasks,
           const CommonOpts& opts, std::ostream& out) {
    Report report;
    report.version = tool_version();
    report.timestamp = current_utc_timestamp();
    report.config = config;
    report.checks = run_battery(tasks, opts.jobs);
    std::string payload =
        emit(report, opts.format == "json" ? ReportFormat::json
                                           : ReportFormat::text);
    if (!opts.out_path.empty()) {
        std::ofstream file(opts.out_path, std::ios::binary);
        file << payload;
        if (!file) {
            out << "i/o error: cannot write " << opts.out_path << "\n";
            return 2;
        }
        out << "wrote " << opts.out_path << "\n";
    } else {
        out << payload;
    }
    return exit_code(report);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact verification of WZ pairs, q-series identities for "
                 "1/pi and truncated-sum congruences"};
    app.require_subcommand(1);

    CommonOpts opts;
    try {
        opts.precision = env_precision();
    } catch (const usage_error& e) {
        out << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    // wz ------------------------------------------------------------------
    CLI::App* wz = app.add_subcommand("wz", "WZ-pair relation checks");
    wz->require_subcommand(1);
    struct {
        std::string pair = "all";
        std::string a = "1";
        std::string transform;
        long nmax = 12, kmax = 12;
        bool corrupt = false;
    } wz_opts;
    CLI::App* wz_check =
        wz->add_subcommand("check", "exact residual grid for a pair");
    wz_check->add_option("--pair", wz_opts.pair,
                         "pair id or \"all\"")->capture_default_str();
    wz_check->add_option("--nmax", wz_opts.nmax, "grid bound in n")
        ->capture_default_str();
    wz_check->add_option("--kmax", wz_opts.kmax, "grid bound in k")
        ->capture_default_str();
    wz_check->add_option("--a", wz_opts.a,
                         "free-parameter substitution (1, q, -q, [-]q^E)")
        ->capture_default_str();
    wz_check->add_flag("--corrupt", wz_opts.corrupt,
                       "negative control: perturb G before checking");
    add_common(wz_check, &opts);

    CLI::App* wz_transform = wz->add_subcommand(
        "transform", "residual grid for a transformed pair");
    wz_transform->add_option("--pair", wz_opts.pair, "pair id")->required();
    wz_transform
        ->add_option("--transform", wz_opts.transform, "p1, p2, p3 or p23")
        ->required()
        ->check(CLI::IsMember({"p1", "p2", "p3", "p23"}));
    wz_transform->add_option("--nmax", wz_opts.nmax, "grid bound in n")
        ->capture_default_str();
    wz_transform->add_option("--kmax", wz_opts.kmax, "grid bound in k")
        ->capture_default_str();
    wz_transform->add_option("--a", wz_opts.a, "free-parameter substitution")
        ->capture_default_str();
    add_common(wz_transform, &opts);

    // identity --------------------------------------------------------------
    CLI::App* identity_cmd =
        app.add_subcommand("identity", "series identity checks");
    identity_cmd->require_subcommand(1);
    struct {
        std::string id;
        std::string q = "1/2";
        std::string a = "1";
        long terms = 40;
        long nmax = 15;
        long tol_digits = 20;
        bool corrupt = false;
    } id_opts;
    CLI::App* id_verify = identity_cmd->add_subcommand(
        "verify", "numeric residual of a q-identity");
    id_verify->add_option("--id", id_opts.id, "identity id")->required();
    id_verify->add_option("--q", id_opts.q, "rational sample, |q| < 1")
        ->capture_default_str();
    id_verify->add_option("--terms", id_opts.terms, "number of terms")
        ->capture_default_str();
    id_verify->add_option("--a", id_opts.a, "free-parameter substitution")
        ->capture_default_str();
    id_verify
        ->add_option("--tol-digits", id_opts.tol_digits,
                     "pass when residual < 10^-D")
        ->capture_default_str();
    id_verify->add_flag("--corrupt", id_opts.corrupt,
                        "negative control: shift the sum by 1");
    add_common(id_verify, &opts);

    CLI::App* id_limit = identity_cmd->add_subcommand(
        "limit", "exact q->1 term limits against the classical companion");
    id_limit->add_option("--id", id_opts.id, "identity id")->required();
    id_limit->add_option("--nmax", id_opts.nmax, "largest term index")
        ->capture_default_str();
    add_common(id_limit, &opts);

    CLI::App* id_classical = identity_cmd->add_subcommand(
        "classical", "classical partial sum against its closed constant");
    id_classical->add_option("--id", id_opts.id, "identity id")->required();
    id_classical->add_option("--terms", id_opts.terms, "number of terms")
        ->capture_default_str();
    id_classical
        ->add_option("--tol-digits", id_opts.tol_digits,
                     "pass when residual < 10^-D")
        ->capture_default_str();
    add_common(id_classical, &opts);

    // congruence ------------------------------------------------------------
    CLI::App* congruence =
        app.add_subcommand("congruence", "truncated-sum congruence checks");
    congruence->require_subcommand(1);
    struct {
        int which = 0; // 0 = both
        std::vector<long> m;
        std::vector<long> p;
        std::vector<long> upper;
        std::string id;
        bool strong = false;
    } cg_opts;
    CLI::App* qtheorem = congruence->add_subcommand(
        "qtheorem", "claimed q-congruences for the truncated series");
    qtheorem->add_option("--which", cg_opts.which, "1 or 2 (default both)")
        ->check(CLI::IsMember({1, 2}));
    qtheorem->add_option("--m", cg_opts.m, "comma-separated m list")
        ->delimiter(',');
    qtheorem->add_flag("--strong-modulus", cg_opts.strong,
                       "also report the exploratory [m]*Phi^2 modulus "
                       "(claim 2 only)");
    add_common(qtheorem, &opts);

    CLI::App* super = congruence->add_subcommand(
        "super", "classical supercongruences mod p^3 / p^2");
    super->add_option("--which", cg_opts.which, "1 or 2 (default both)")
        ->check(CLI::IsMember({1, 2}));
    super->add_option("--p", cg_opts.p, "comma-separated prime list")
        ->delimiter(',');
    add_common(super, &opts);

    CLI::App* asub = congruence->add_subcommand(
        "asub", "terminating evaluations at a = q^{+-m}");
    asub->add_option("--id", cg_opts.id,
                     "\"level1-q-a\" or \"28n3-q-a\" (default both)");
    asub->add_option("--m", cg_opts.m, "comma-separated m list")
        ->delimiter(',');
    add_common(asub, &opts);

    CLI::App* cyclo = congruence->add_subcommand(
        "cyclo", "[m] divides the truncated sum at a = 1");
    cyclo->add_option("--id", cg_opts.id, "identity id")
        ->capture_default_str();
    cyclo->add_option("--m", cg_opts.m, "comma-separated m list")
        ->delimiter(',');
    cyclo->add_option("--upper", cg_opts.upper,
                      "truncation bounds (default (m-1)/2 and m-1)")
        ->delimiter(',');
    add_common(cyclo, &opts);

    // report ----------------------------------------------------------------
    CLI::App* report_cmd =
        app.add_subcommand("report", "run the full standard battery");
    bool report_all = false;
    long report_grid = 12;
    report_cmd->add_flag("--all", report_all, "run every registered check")
        ->required();
    report_cmd->add_option("--grid", report_grid, "wz grid bound")
        ->capture_default_str();
    add_common(report_cmd, &opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        (void)app.exit(e, help, help);
        out << help.str();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        validate_common(opts);
        Config config;
        std::vector<Task> tasks;

        if (wz_check->parsed() || wz_transform->parsed()) {
            Monom a = parse_monom(wz_opts.a);
            if (wz_opts.nmax < 0 || wz_opts.kmax < 0)
                throw usage_error("grid bounds must be nonnegative");
            std::vector<std::string> pairs;
            if (wz_opts.pair == "all" && wz_check->parsed())
                pairs = wz_pair_ids();
            else {
                require_wz_pair(wz_opts.pair);
                pairs = {wz_opts.pair};
            }
            config.emplace_back("command", wz_check->parsed()
                                               ? "wz check"
                                               : "wz transform");
            config.emplace_back("pair", wz_opts.pair);
            if (!wz_opts.transform.empty())
                config.emplace_back("transform", wz_opts.transform);
            config.emplace_back("nmax", std::to_string(wz_opts.nmax));
            config.emplace_back("kmax", std::to_string(wz_opts.kmax));
            config.emplace_back("a", monom_text(a));
            if (wz_opts.corrupt)
                config.emplace_back("corrupt", "1");
            for (const std::string& id : pairs)
                tasks.push_back(wz_grid_task(id, a, wz_opts.transform,
                                             wz_opts.nmax, wz_opts.kmax,
                                             wz_opts.corrupt));
        } else if (id_verify->parsed()) {
            require_identity(id_opts.id);
            if (!identity(id_opts.id).is_q)
                throw usage_error("\"" + id_opts.id +
                                  "\" is classical; use identity classical");
            Monom a = parse_monom(id_opts.a);
            Rational q0 = parse_q(id_opts.q);
            if (id_opts.terms < 1)
                throw usage_error("--terms must be positive");
            config.emplace_back("command", "identity verify");
            config.emplace_back("id", id_opts.id);
            config.emplace_back("q", to_string(q0));
            config.emplace_back("terms", std::to_string(id_opts.terms));
            config.emplace_back("a", monom_text(a));
            config.emplace_back("tol_digits",
                                std::to_string(id_opts.tol_digits));
            if (id_opts.corrupt)
                config.emplace_back("corrupt", "1");
            tasks.push_back(identity_verify_task(
                id_opts.id, a, q0, id_opts.terms, opts.precision,
                id_opts.tol_digits, id_opts.corrupt));
        } else if (id_limit->parsed()) {
            require_identity(id_opts.id);
            config.emplace_back("command", "identity limit");
            config.emplace_back("id", id_opts.id);
            config.emplace_back("nmax", std::to_string(id_opts.nmax));
            tasks.push_back(identity_limit_task(id_opts.id, id_opts.nmax));
        } else if (id_classical->parsed()) {
            require_identity(id_opts.id);
            if (identity(id_opts.id).is_q)
                throw usage_error("\"" + id_opts.id +
                                  "\" is a q-identity; use identity verify");
            config.emplace_back("command", "identity classical");
            config.emplace_back("id", id_opts.id);
            config.emplace_back("terms", std::to_string(id_opts.terms));
            config.emplace_back("tol_digits",
                                std::to_string(id_opts.tol_digits));
            tasks.push_back(classical_task(id_opts.id, id_opts.terms,
                                           opts.precision,
                                           id_opts.tol_digits));
        } else if (qtheorem->parsed()) {
            config.emplace_back("command", "congruence qtheorem");
            config.emplace_back("which", cg_opts.which == 0
                                             ? "both"
                                             : std::to_string(cg_opts.which));
            if (cg_opts.which == 0 && !cg_opts.m.empty())
                throw usage_error(
                    "--m needs --which (the claims have different domains)");
            if (cg_opts.which != 2 && cg_opts.strong)
                throw usage_error("--strong-modulus applies to --which 2");
            if (cg_opts.which == 0) {
                add_qtheorem_tasks(tasks, 1, kTheorem1M, false);
                add_qtheorem_tasks(tasks, 2, kTheorem2M, false);
            } else {
                std::vector<long> ms =
                    !cg_opts.m.empty()
                        ? cg_opts.m
                        : (cg_opts.which == 1 ? kTheorem1M : kTheorem2M);
                validate_theorem_m(cg_opts.which, ms);
                std::string mlist;
                for (long m : ms)
                    mlist += (mlist.empty() ? "" : ",") + std::to_string(m);
                config.emplace_back("m", mlist);
                if (cg_opts.strong)
                    config.emplace_back("strong_modulus", "1");
                add_qtheorem_tasks(tasks, cg_opts.which, ms, cg_opts.strong);
            }
        } else if (super->parsed()) {
            config.emplace_back("command", "congruence super");
            config.emplace_back("which", cg_opts.which == 0
                                             ? "both"
                                             : std::to_string(cg_opts.which));
            if (cg_opts.which == 0 && !cg_opts.p.empty())
                throw usage_error("--p needs --which");
            if (cg_opts.which == 0) {
                add_super_tasks(tasks, 1, kLevel1P);
                add_super_tasks(tasks, 2, kLevel2P);
            } else {
                std::vector<long> ps =
                    !cg_opts.p.empty()
                        ? cg_opts.p
                        : (cg_opts.which == 1 ? kLevel1P : kLevel2P);
                validate_primes(ps);
                if (cg_opts.which == 2)
                    for (long p : ps)
                        if (p < 5)
                            throw usage_error(
                                "claim 2 needs p >= 5 (p coprime to 6)");
                std::string plist;
                for (long p : ps)
                    plist += (plist.empty() ? "" : ",") + std::to_string(p);
                config.emplace_back("p", plist);
                add_super_tasks(tasks, cg_opts.which, ps);
            }
        } else if (asub->parsed()) {
            config.emplace_back("command", "congruence asub");
            std::vector<std::pair<std::string, std::vector<long>>> families;
            if (cg_opts.id.empty()) {
                families = {{"level1-q-a", kTerminating1M},
                            {"28n3-q-a", kTerminating2M}};
            } else if (cg_opts.id == "level1-q-a" ||
                       cg_opts.id == "28n3-q-a") {
                families = {{cg_opts.id,
                             cg_opts.id == "level1-q-a" ? kTerminating1M
                                                        : kTerminating2M}};
                config.emplace_back("id", cg_opts.id);
            } else {
                throw usage_error("asub id must be level1-q-a or 28n3-q-a");
            }
            for (auto& [id, defaults] : families) {
                std::vector<long> ms =
                    cg_opts.m.empty() ? defaults : cg_opts.m;
                for (long m : ms) {
                    bool ok = id == "level1-q-a" ? (m > 0 && m % 2 == 1)
                                                 : (m > 0 && m % 2 == 1 &&
                                                    m % 3 != 0);
                    if (!ok)
                        throw usage_error(
                            "m=" + std::to_string(m) +
                            " is outside the terminating family of " + id);
                    tasks.push_back(terminating_task(id, m));
                }
            }
        } else if (cyclo->parsed()) {
            std::string id =
                cg_opts.id.empty() ? "new-level1-q" : cg_opts.id;
            require_identity(id);
            std::vector<long> ms =
                cg_opts.m.empty() ? std::vector<long>{3, 5, 7, 9, 15}
                                  : cg_opts.m;
            config.emplace_back("command", "congruence cyclo");
            config.emplace_back("id", id);
            std::string mlist;
            for (long m : ms)
                mlist += (mlist.empty() ? "" : ",") + std::to_string(m);
            config.emplace_back("m", mlist);
            for (long m : ms) {
                if (m <= 1 || m % 2 == 0)
                    throw usage_error("cyclo needs odd m > 1, got " +
                                      std::to_string(m));
                std::vector<long> uppers =
                    cg_opts.upper.empty()
                        ? std::vector<long>{(m - 1) / 2, m - 1}
                        : cg_opts.upper;
                for (long upper : uppers) {
                    if (upper < 0)
                        throw usage_error("--upper must be nonnegative");
                    tasks.push_back(cyclo_task(id, m, upper));
                }
            }
        } else if (report_cmd->parsed()) {
            if (report_grid < 0)
                throw usage_error("--grid must be nonnegative");
            config.emplace_back("command", "report --all");
            config.emplace_back("grid", std::to_string(report_grid));
            tasks = build_all_battery(opts, report_grid);
        }

        push_common(config, opts);
        return finish(config, std::move(tasks), opts, out);
    } catch (const usage_error& e) {
        out << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace qwz
