#include "macjt/verify/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

#include "macjt/coefficients/coefficients.hpp"
#include "macjt/error.hpp"
#include "macjt/expansion/expansion.hpp"
#include "macjt/operators/hfunction.hpp"
#include "macjt/operators/operators.hpp"
#include "macjt/symfunc/macdonald.hpp"
#include "macjt/symfunc/poly_in_vars.hpp"

namespace macjt::verify {

using arith::QTRational;
using coef::ThetaVector;
using coef::USpec;
using Outcome = std::optional<std::string>;

namespace {

struct Case {
    std::string name;
    std::function<Outcome()> run;
};

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

std::vector<Partition> range(int max_weight, int max_length, int min_weight = 1)
{
    std::vector<Partition> out;
    for (int w = min_weight; w <= max_weight; ++w)
        for (auto &lam : max_length > 0 ? partitions_of(w, max_length) : partitions_of(w)) out.push_back(lam);
    return out;
}

std::string theta_str(const ThetaVector &th) { return nlohmann::json(th).dump(); }

SuiteReport run_cases(const std::string &suite, const std::vector<Case> &cases, int parallelism)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Outcome> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                results[i] = cases[i].run();
            } catch (const std::exception &e) {
                results[i] = std::string("exception: ") + e.what();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(parallelism, static_cast<int>(cases.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto &th : pool) th.join();

    SuiteReport r;
    r.suite = suite;
    r.cases = static_cast<long>(cases.size());
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (!results[i]) continue;
        ++r.failures;
        if (!r.witness) r.witness = cases[i].name + ": " + *results[i];
    }
    r.passed = r.failures == 0;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Outcome theorem1_case(const Partition &lam, nlohmann::json &off, std::mutex &mu)
{
    const int w = lam.weight();
    const expansion::Expansion x = expansion::theorem1_expand(lam);
    {
        std::lock_guard lock(mu);
        for (const auto &t : x.off_basis)
            off.push_back({{"lambda", lam.parts()},
                           {"theta", t.theta},
                           {"target", t.target},
                           {"coefficient", t.coefficient.to_string()}});
    }
    if (expansion::reconstruct(x, w) != sym::macdonald_Q(lam, w)) return "reconstruction differs from Q";
    const auto F = expansion::inverse_pieri_oracle(lam);
    for (const auto &t : x.terms)
        if (!F.count(t.theta)) return "theta " + theta_str(t.theta) + " missing from the oracle";
    for (const auto &[th, f] : F) {
        QTRational c;
        for (const auto &t : x.terms)
            if (t.theta == th) c = t.coefficient;
        if (c != f) return "C differs from the oracle at theta " + theta_str(th);
    }
    const auto back = expansion::pieri_round_trip(x);
    if (back.size() != 1 || back.begin()->first != lam || !back.begin()->second.is_one())
        return "Pieri round trip does not return Q_lambda";
    return std::nullopt;
}

SuiteReport theorem1_suite(const SuiteConfig &cfg)
{
    auto lams = range(pick(cfg.max_weight, 6), pick(cfg.max_length, 3));
    lams.insert(lams.end(), cfg.extra.begin(), cfg.extra.end());
    nlohmann::json off = nlohmann::json::array();
    std::mutex mu;
    std::vector<Case> cases;
    for (const auto &lam : lams)
        cases.push_back({"lambda=" + lam.to_string(), [&, lam] { return theorem1_case(lam, off, mu); }});
    SuiteReport r = run_cases("theorem1", cases, cfg.parallelism);
    r.details["off_basis"] = off;
    return r;
}

SuiteReport theorem3_suite(const SuiteConfig &cfg)
{
    std::vector<Case> cases;
    for (const auto &lam : range(pick(cfg.max_weight, 5), cfg.max_length))
        cases.push_back({"lambda=" + lam.to_string(), [lam]() -> Outcome {
                             const int w = lam.weight();
                             const auto x = expansion::theorem3_expand(lam);
                             if (!expansion::same_aggregate(x.aggregate,
                                                            expansion::g_basis_expansion(sym::macdonald_Q(lam, w), w)))
                                 return "aggregate differs from the g-basis solve";
                             return std::nullopt;
                         }});
    return run_cases("theorem3", cases, cfg.parallelism);
}

SuiteReport duality_suite(const SuiteConfig &cfg)
{
    std::vector<Case> cases;
    for (const auto &lam : range(pick(cfg.max_weight, 5), cfg.max_length))
        cases.push_back({"lambda=" + lam.to_string(), [lam]() -> Outcome {
                             const int w = lam.weight();
                             const Partition conj = lam.conjugate();
                             const auto x2 = expansion::theorem2_expand(lam);
                             const auto x1 = expansion::theorem1_expand(conj);
                             if (!expansion::same_terms(x2, expansion::omega_image(x1)))
                                 return "theorem 2 terms differ from the omega image of theorem 1";
                             const sym::SymFunc p = sym::macdonald_P(lam, w);
                             if (expansion::reconstruct(x2, w) != p) return "theorem 2 does not rebuild P";
                             if (sym::omega(expansion::reconstruct(x1, w).swapped(), true) != p)
                                 return "omega of the swapped theorem 1 sum is not P";
                             const auto x4 = expansion::theorem4_expand(lam);
                             if (!expansion::same_aggregate(x4.aggregate,
                                                            expansion::omega_image(expansion::theorem3_expand(conj).aggregate)))
                                 return "theorem 4 differs from the omega image of theorem 3";
                             if (expansion::reconstruct(x4, w) != p) return "theorem 4 does not rebuild P";
                             return std::nullopt;
                         }});
    return run_cases("duality", cases, cfg.parallelism);
}

SuiteReport lemma1_suite(const SuiteConfig &cfg)
{
    std::vector<int> ns = cfg.n > 0 ? std::vector<int>{cfg.n} : std::vector<int>{1, 2, 3};
    std::vector<Case> cases;
    nlohmann::json reports = nlohmann::json::array();
    std::mutex mu;
    for (int n : ns)
        for (int which : {1, 2})
            cases.push_back({"lemma1 " + std::string(which == 1 ? "(i)" : "(ii)") + " n=" + std::to_string(n),
                             [&, n, which]() -> Outcome {
                                 const auto rep = ops::check_lemma1(which, n, cfg.samples, cfg.seed);
                                 {
                                     std::lock_guard lock(mu);
                                     reports.push_back(rep.to_json());
                                 }
                                 if (!rep.passed())
                                     return rep.failures.empty() ? "no samples" : rep.failures.front().dump();
                                 return std::nullopt;
                             }});
    SuiteReport r = run_cases("lemma1", cases, cfg.parallelism);
    r.details["seed"] = cfg.seed;
    r.details["samples"] = cfg.samples;
    r.details["reports"] = reports;
    return r;
}

SuiteReport lemma2_suite(const SuiteConfig &cfg)
{
    std::vector<Case> cases;
    for (const auto &lam : range(pick(cfg.max_weight, 6), pick(cfg.max_length, 3)))
        cases.push_back({"lambda=" + lam.to_string(), [lam]() -> Outcome {
                             if (!coef::check_lemma2(lam, 3)) return "coefficient of z differs";
                             return std::nullopt;
                         }});
    return run_cases("lemma2", cases, cfg.parallelism);
}

const std::vector<std::vector<int>> &recurrence_lambdas()
{
    static const std::vector<std::vector<int>> v{{2, 1, 1}, {2, 2, 1}, {3, 1, 0}, {3, 2, 1}};
    return v;
}

SuiteReport recurrence_suite(const std::string &name, const SuiteConfig &cfg)
{
    const int bound = 3;
    std::vector<Case> cases;
    for (const auto &lam : recurrence_lambdas()) {
        const USpec u = USpec::from_partition(lam);
        for (int a = 0; a <= bound; ++a)
            for (int b = 0; a + b <= bound; ++b) {
                const ThetaVector th{a, b};
                cases.push_back({"lambda=" + nlohmann::json(lam).dump() + " theta=" + theta_str(th),
                                 [name, u, th]() -> Outcome {
                                     const bool ok = name == "recurrence5" ? coef::check_recurrence_5(th, u)
                                                                           : coef::check_remark_recurrence(th, u);
                                     if (!ok) return "recurrence fails";
                                     return std::nullopt;
                                 }});
            }
    }
    return run_cases(name, cases, cfg.parallelism);
}

SuiteReport eigen_suite(const SuiteConfig &cfg)
{
    std::vector<Case> cases;
    const int max_n = pick(cfg.n, 3);
    for (int n = 1; n <= max_n; ++n)
        for (const auto &lam : range(pick(cfg.max_weight, 5), n, 0))
            cases.push_back({"lambda=" + lam.to_string() + " n=" + std::to_string(n), [lam, n]() -> Outcome {
                                 const sym::PolyInVars f = sym::expand_in_variables(sym::macdonald_P(lam), n);
                                 if (ops::apply_E(f) != f * ops::E_eigenvalue(lam, n)) return "E eigen-equation fails";
                                 const auto d = ops::apply_D(f);
                                 const auto ev = ops::D_eigenvalue(lam, n);
                                 if (d.size() != static_cast<std::size_t>(n + 1)) return "D has the wrong degree in a";
                                 for (int k = 0; k <= n; ++k)
                                     if (d[k] != f * ev.at(k)) return "D eigen-equation fails at a^" + std::to_string(k);
                                 return std::nullopt;
                             }});
    return run_cases("eigen", cases, cfg.parallelism);
}

SuiteReport schur_suite(const SuiteConfig &cfg)
{
    std::vector<Case> cases;
    for (const auto &lam : range(pick(cfg.max_weight, 6), cfg.max_length, 0))
        cases.push_back({"lambda=" + lam.to_string(), [lam]() -> Outcome {
                             if (!expansion::schur_check(lam)) return "Jacobi-Trudi check fails";
                             if (!expansion::nk_check(lam)) return "dual Jacobi-Trudi check fails";
                             return std::nullopt;
                         }});
    // C at q = t on every specialization with parts <= 4 and n <= 3
    for (int n = 1; n <= 3; ++n)
        for (const auto &lam : range(4 * (n + 1), n + 1, 0)) {
            if (lam[0] > 4) continue;
            const Composition padded = lam.padded(n + 1);
            cases.push_back({"collapse lambda=" + nlohmann::json(padded).dump(), [padded, n]() -> Outcome {
                                 const USpec u = USpec::from_partition(padded);
                                 ThetaVector th(n, 0);
                                 while (true) {
                                     bool binary = true;
                                     int size = 0;
                                     for (int x : th) {
                                         binary &= x <= 1;
                                         size += x;
                                     }
                                     const QTRational want = binary ? QTRational(size % 2 ? -1 : 1) : QTRational(0);
                                     if (coef::C_at_q_equals_t(th, u) != want) return "theta=" + theta_str(th);
                                     int i = 0;
                                     while (i < n && th[i] == 2) th[i++] = 0;
                                     if (i == n) break;
                                     ++th[i];
                                 }
                                 return std::nullopt;
                             }});
        }
    return run_cases("schur", cases, cfg.parallelism);
}

SuiteReport regularization_suite(const SuiteConfig &cfg)
{
    std::vector<Case> cases;
    for (const auto &lam : range(pick(cfg.max_weight, 6), pick(cfg.max_length, 4)))
        cases.push_back({"lambda=" + lam.to_string(), [lam]() -> Outcome {
                             const Composition padded = lam.padded(lam.length());
                             const USpec u = USpec::from_partition(padded);
                             const std::size_t n = u.size();
                             ThetaVector th(n, 0);
                             std::function<Outcome(std::size_t, int)> rec = [&](std::size_t i, int left) -> Outcome {
                                 if (i == n) {
                                     const auto c = coef::C_coefficient(th, u);
                                     if (!c.regularized) return std::nullopt;
                                     std::vector<long> w3(n);
                                     for (std::size_t k = 0; k < n; ++k) w3[k] = 5 + 7 * static_cast<long>(k * k);
                                     if (coef::C_coefficient_along(th, u, w3).value != c.value)
                                         return "direction dependence at theta=" + theta_str(th);
                                     return std::nullopt;
                                 }
                                 for (int x = 0; x <= left; ++x) {
                                     th[i] = x;
                                     if (auto o = rec(i + 1, left - x)) return o;
                                 }
                                 th[i] = 0;
                                 return std::nullopt;
                             };
                             return rec(0, padded.back());
                         }});
    for (int n = 1; n <= 3; ++n)
        cases.push_back({"H vanishing n=" + std::to_string(n), [n, &cfg]() -> Outcome {
                             const int bad = ops::check_H_vanishing(n, 50, cfg.seed);
                             if (bad) return std::to_string(bad) + " nonzero values at a = -1";
                             return std::nullopt;
                         }});
    SuiteReport r = run_cases("regularization", cases, cfg.parallelism);
    const auto s = coef::c_stats();
    r.details["evaluations"] = s.evaluations;
    r.details["regularized"] = s.regularized;
    r.details["direction_checks"] = s.direction_checks;
    r.details["direction_mismatches"] = s.direction_mismatches;
    if (s.direction_mismatches) {
        r.passed = false;
        if (!r.witness) r.witness = "direction mismatches recorded";
    }
    return r;
}

} // namespace

nlohmann::json SuiteReport::to_json() const
{
    nlohmann::json j{{"suite", suite}, {"passed", passed}, {"cases", cases}, {"failures", failures}};
    j["witness"] = witness ? nlohmann::json(*witness) : nlohmann::json(nullptr);
    j["seconds"] = seconds;
    j["details"] = details;
    return j;
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"theorem1", "theorem3",    "duality", "lemma1", "lemma2",        "recurrence5",
                                                "remark",   "eigen",       "schur",   "regularization"};
    return names;
}

bool is_suite(const std::string &name)
{
    if (name == "all") return true;
    for (const auto &s : suite_names())
        if (s == name) return true;
    return false;
}

std::vector<SuiteReport> run_suite(const std::string &name, const SuiteConfig &cfg)
{
    if (name == "all") {
        std::vector<SuiteReport> out;
        for (const auto &s : suite_names()) out.push_back(run_suite(s, cfg).front());
        return out;
    }
    if (name == "theorem1") return {theorem1_suite(cfg)};
    if (name == "theorem3") return {theorem3_suite(cfg)};
    if (name == "duality") return {duality_suite(cfg)};
    if (name == "lemma1") return {lemma1_suite(cfg)};
    if (name == "lemma2") return {lemma2_suite(cfg)};
    if (name == "recurrence5" || name == "remark") return {recurrence_suite(name, cfg)};
    if (name == "eigen") return {eigen_suite(cfg)};
    if (name == "schur") return {schur_suite(cfg)};
    if (name == "regularization") return {regularization_suite(cfg)};
    throw MathError(ErrorCode::ParseError, "unknown suite " + name);
}

} // namespace macjt::verify
