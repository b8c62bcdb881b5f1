#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "macjt/coefficients/coefficients.hpp"
#include "macjt/error.hpp"
#include "macjt/expansion/expansion.hpp"
#include "macjt/io/json.hpp"
#include "macjt/symfunc/macdonald.hpp"
#include "macjt/verify/suites.hpp"

using namespace macjt;
using coef::ThetaVector;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr const char *kCacheEnv = "MACJT_CACHE";

struct Config {
    int degree_cap = sym::kDefaultDegreeCap;
    std::string cache_path;
    std::string format = "text";
    int parallelism = 1;
    std::uint64_t seed = verify::kDefaultSeed;
};

struct InvariantFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ThetaVector parse_theta(const std::string &text)
{
    ThetaVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception &) {
            throw MathError(ErrorCode::ParseError, "bad theta entry '" + item + "'");
        }
    }
    return out;
}

Partition checked_partition(const std::string &text, const Config &cfg)
{
    Partition lam = Partition::parse(text);
    if (lam.weight() > cfg.degree_cap)
        throw MathError(ErrorCode::DegreeCapExceeded,
                        "|lambda| = " + std::to_string(lam.weight()) + " exceeds the degree cap " +
                            std::to_string(cfg.degree_cap));
    return lam;
}

void verify_expansion(const expansion::Expansion &x)
{
    const int w = x.source.weight();
    if (x.q_equals_t) {
        if (!(x.theorem == 1 ? expansion::schur_check(x.source) : expansion::nk_check(x.source)))
            throw InvariantFailure("q = t expansion differs from the determinant");
        return;
    }
    if (x.theorem == 1) {
        if (expansion::reconstruct(x, w) != sym::macdonald_Q(x.source, w))
            throw InvariantFailure("reconstruction differs from Q");
        const auto F = expansion::inverse_pieri_oracle(x.source, static_cast<int>(x.lambda.size()));
        for (const auto &t : x.terms)
            if (!F.count(t.theta) || F.at(t.theta) != t.coefficient)
                throw InvariantFailure("coefficient differs from the inverse Pieri solve");
    } else {
        if (expansion::reconstruct(x, w) != sym::macdonald_P(x.source, w))
            throw InvariantFailure("reconstruction differs from P");
        const auto dual = expansion::theorem1_expand(x.source.conjugate(), static_cast<int>(x.lambda.size()));
        if (!expansion::same_terms(x, expansion::omega_image(dual)))
            throw InvariantFailure("terms differ from the omega image");
    }
}

void verify_expansion(const expansion::GResult &x)
{
    const int w = x.source.weight();
    const bool thm3 = x.theorem == 3;
    if (x.q_equals_t) {
        sym::SymFunc s = sym::macdonald_P(x.source, std::max(w, 1)).q_equals_t();
        if (expansion::reconstruct(x, std::max(w, 1)) != s) throw InvariantFailure("q = t expansion differs from s");
        return;
    }
    if (thm3) {
        if (!expansion::same_aggregate(x.aggregate, expansion::g_basis_expansion(sym::macdonald_Q(x.source, w), w)))
            throw InvariantFailure("aggregate differs from the g-basis solve");
    } else {
        const auto dual = expansion::theorem3_expand(x.source.conjugate(), static_cast<int>(x.lambda.size()));
        if (!expansion::same_aggregate(x.aggregate, expansion::omega_image(dual.aggregate)))
            throw InvariantFailure("aggregate differs from the omega image");
        if (expansion::reconstruct(x, w) != sym::macdonald_P(x.source, w))
            throw InvariantFailure("reconstruction differs from P");
    }
}

template <typename X>
void print(const X &x, const std::string &format, bool verified)
{
    if (format == "json") {
        nlohmann::json j = expansion::to_json(x);
        if (verified) j["verified"] = true;
        std::cout << j.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << expansion::render_latex(x);
    } else {
        std::cout << expansion::render_text(x);
    }
}

int cmd_expand(const Config &cfg, const std::string &lambda, int theorem, bool q_equals_t, bool verify)
{
    const Partition lam = checked_partition(lambda, cfg);
    if (theorem == 1 || theorem == 2) {
        const auto x = theorem == 1 ? expansion::theorem1_expand(lam, 0, q_equals_t)
                                    : expansion::theorem2_expand(lam, 0, q_equals_t);
        if (verify) verify_expansion(x);
        print(x, cfg.format, verify);
    } else {
        const auto x = theorem == 3 ? expansion::theorem3_expand(lam, 0, q_equals_t)
                                    : expansion::theorem4_expand(lam, 0, q_equals_t);
        if (verify) verify_expansion(x);
        print(x, cfg.format, verify);
    }
    return 0;
}

int cmd_coeff(const Config &cfg, const std::string &theta_text, const std::string &lambda, bool q_equals_t)
{
    const Partition lam = checked_partition(lambda, cfg);
    const ThetaVector theta = parse_theta(theta_text);
    if (lam.length() > theta.size() + 1)
        throw MathError(ErrorCode::ParseError, "theta needs at least l(lambda) - 1 = " +
                                                   std::to_string(lam.length() - 1) + " entries");
    const coef::USpec u = coef::USpec::from_partition(lam.padded(theta.size() + 1));
    coef::CValue c = coef::C_coefficient(theta, u);
    if (q_equals_t) c.value = c.value.q_equals_t();
    if (cfg.format == "json") {
        nlohmann::json j = c.to_json();
        j["theta"] = theta;
        j["lambda"] = lam.padded(theta.size() + 1);
        j["q_equals_t"] = q_equals_t;
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "latex") {
        std::cout << expansion::latex(c.value) << (c.regularized ? "  % regularized" : "") << "\n";
    } else {
        std::cout << c.value.to_string() << (c.regularized ? "  (regularized)" : "") << "\n";
    }
    return 0;
}

int cmd_verify(const Config &cfg, const std::string &suite, verify::SuiteConfig sc,
               const std::vector<std::string> &extra)
{
    if (!verify::is_suite(suite)) throw MathError(ErrorCode::ParseError, "unknown suite " + suite);
    sc.seed = cfg.seed;
    sc.parallelism = cfg.parallelism;
    for (const auto &e : extra) sc.extra.push_back(checked_partition(e, cfg));
    const auto reports = verify::run_suite(suite, sc);
    bool ok = true;
    nlohmann::json j = nlohmann::json::array();
    for (const auto &r : reports) {
        ok &= r.passed;
        j.push_back(r.to_json());
    }
    if (cfg.format == "json") {
        std::cout << nlohmann::json{{"passed", ok}, {"seed", cfg.seed}, {"suites", j}}.dump(2) << "\n";
    } else {
        std::cout << "seed " << cfg.seed << "\n";
        for (const auto &r : reports)
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << " (" << r.cases << " cases)\n";
    }
    for (const auto &r : reports)
        if (!r.passed) std::cerr << "first failure in " << r.suite << ": " << r.witness.value_or("?") << "\n";
    return ok ? 0 : kExitInvariant;
}

int cmd_cache(const Config &cfg, const std::string &action)
{
    if (cfg.cache_path.empty())
        throw MathError(ErrorCode::ParseError, std::string("no cache path (use --cache or ") + kCacheEnv + ")");
    const std::filesystem::path path = cfg.cache_path;
    if (action == "clear") {
        std::error_code ec;
        std::filesystem::remove(path, ec);
        std::cout << "cleared " << path.string() << "\n";
        return 0;
    }
    nlohmann::json report{{"path", path.string()}, {"exists", std::filesystem::exists(path)}};
    std::size_t records = 0, bad = 0;
    nlohmann::json parts{{"P", nlohmann::json::array()}, {"Q", nlohmann::json::array()}};
    if (std::ifstream in(path); in) {
        std::string line;
        while (std::getline(in, line)) {
            try {
                const auto rec = nlohmann::json::parse(line);
                parts[rec.at("basis").get<std::string>()].push_back(rec.at("partition"));
                ++records;
            } catch (const std::exception &) {
                ++bad;
            }
        }
        report["bytes"] = std::filesystem::file_size(path);
    }
    report["records"] = records;
    report["unreadable_lines"] = bad;
    report["partitions"] = parts;
    std::cout << report.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Expansions of Macdonald polynomials in g's and e's, with exact verification"};
    app.require_subcommand(1);
    Config cfg;
    if (const char *env = std::getenv(kCacheEnv)) cfg.cache_path = env;

    std::string lambda, theta, suite = "all", cache_action;
    int theorem = 1;
    bool q_equals_t = false, verify_flag = false;
    verify::SuiteConfig sc;
    std::vector<std::string> extra;

    auto *expand = app.add_subcommand("expand", "expand Q_lambda or P_lambda by one of the four theorems");
    expand->add_option("--lambda", lambda, "partition, e.g. 2,1")->required();
    expand->add_option("--theorem", theorem)->check(CLI::Range(1, 4));
    expand->add_flag("--q-equals-t", q_equals_t);
    expand->add_flag("--verify", verify_flag, "check the output against the linear-algebra oracles");

    auto *coeff = app.add_subcommand("coeff", "C_theta at the specialization of lambda");
    coeff->add_option("--theta", theta)->required();
    coeff->add_option("--lambda", lambda)->required();
    coeff->add_flag("--q-equals-t", q_equals_t);

    auto *verify = app.add_subcommand("verify", "run identity suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember([] {
        auto v = verify::suite_names();
        v.push_back("all");
        return v;
    }()));
    verify->add_option("--max-weight", sc.max_weight)->check(CLI::PositiveNumber);
    verify->add_option("--max-length", sc.max_length)->check(CLI::PositiveNumber);
    verify->add_option("--n", sc.n)->check(CLI::PositiveNumber);
    verify->add_option("--samples", sc.samples)->check(CLI::PositiveNumber);
    verify->add_option("--lambda", extra, "extra partitions for the theorem1 suite");

    auto *cache = app.add_subcommand("cache", "inspect or clear the cache file");
    cache->add_option("action", cache_action)->required()->check(CLI::IsMember({"inspect", "clear"}));

    for (auto *sub : {expand, coeff, verify, cache}) {
        sub->add_option("--format", cfg.format, "text, json or latex (verify defaults to json)")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--degree-cap", cfg.degree_cap, "largest weight handled")->check(CLI::PositiveNumber);
        sub->add_option("--cache", cfg.cache_path, std::string("JSON-lines cache of P and Q (overrides ") + kCacheEnv + ")");
        sub->add_option("--seed", cfg.seed, "seed for randomized checks");
        sub->add_option("--parallelism", cfg.parallelism)->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (verify->parsed() && verify->count("--format") == 0) cfg.format = "json";
        if (!cfg.cache_path.empty() && !cache->parsed()) sym::MacdonaldCache::instance().attach_file(cfg.cache_path);
        if (expand->parsed()) return cmd_expand(cfg, lambda, theorem, q_equals_t, verify_flag);
        if (coeff->parsed()) return cmd_coeff(cfg, theta, lambda, q_equals_t);
        if (verify->parsed()) return cmd_verify(cfg, suite, sc, extra);
        return cmd_cache(cfg, cache_action);
    } catch (const InvariantFailure &e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const MathError &e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::ParseError:
            case ErrorCode::IndexOutOfRange:
            case ErrorCode::DegreeCapExceeded: return kExitParse;
            default: return kExitInvariant;
        }
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
