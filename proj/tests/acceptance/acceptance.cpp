// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <unistd.h>

#include "macjt/arith/qtrational.hpp"
#include "macjt/coefficients/coefficients.hpp"
#include "macjt/expansion/expansion.hpp"
#include "macjt/symfunc/macdonald.hpp"
#include "macjt/verify/suites.hpp"

using namespace macjt;
using arith::QTRational;

namespace {

struct Result {
    bool ok = true;
    std::string note;
};

bool all_passed(const std::vector<verify::SuiteReport> &reps, std::string &note)
{
    bool ok = true;
    long cases = 0;
    for (const auto &r : reps) {
        cases += r.cases;
        if (!r.passed) {
            ok = false;
            note += r.suite + ": " + r.witness.value_or("?") + "; ";
        }
    }
    if (ok) note = std::to_string(cases) + " cases";
    return ok;
}

Result suites(std::initializer_list<const char *> names, verify::SuiteConfig cfg = {})
{
    std::vector<verify::SuiteReport> reps;
    for (const char *n : names) {
        auto r = verify::run_suite(n, cfg);
        reps.insert(reps.end(), r.begin(), r.end());
    }
    Result res;
    res.ok = all_passed(reps, res.note);
    return res;
}

std::vector<Partition> theorem1_range()
{
    std::vector<Partition> out;
    for (int w = 1; w <= 6; ++w)
        for (const auto &lam : partitions_of(w, 3)) out.push_back(lam);
    out.push_back(Partition({3, 2, 2, 1}));
    out.push_back(Partition({2, 2, 2, 2}));
    return out;
}

Result criterion1()
{
    Result r;
    int n = 0;
    for (const auto &lam : theorem1_range()) {
        const int w = lam.weight();
        const auto x = expansion::theorem1_expand(lam);
        ++n;
        if (expansion::reconstruct(x, w) != sym::macdonald_Q(lam, w)) {
            r.ok = false;
            r.note = "reconstruction fails at " + lam.to_string();
            return r;
        }
    }
    r.note = std::to_string(n) + " partitions";
    return r;
}

Result criterion2()
{
    Result r;
    int compared = 0;
    for (const auto &lam : theorem1_range()) {
        const Composition padded = lam.padded(lam.length());
        const coef::USpec u = coef::USpec::from_partition(padded);
        for (const auto &[th, f] : expansion::inverse_pieri_oracle(lam)) {
            ++compared;
            if (coef::C_coefficient(th, u).value != f) {
                r.ok = false;
                r.note = "C differs from the inverse Pieri solve at " + lam.to_string();
                return r;
            }
        }
    }
    r.note = std::to_string(compared) + " coefficients";
    return r;
}

QTRational random_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> c(-5, 5), e(0, 2);
    auto poly = [&] {
        QTRational p;
        for (int k = 0; k < 3; ++k) p += QTRational::monomial(c(rng), e(rng), e(rng));
        return p;
    };
    QTRational d;
    do d = poly();
    while (d.is_zero());
    return poly() / d;
}

Result criterion11()
{
    Result r;
    std::mt19937_64 rng(verify::kDefaultSeed);
    for (int i = 0; i < 40; ++i) {
        const QTRational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                  a + b == b + a && a * b == b * a && a - a == QTRational(0);
        if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one();
        if (!ok) {
            r.ok = false;
            r.note = "field axiom fails";
            return r;
        }
    }
    const std::vector<int> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n < 10; ++n) {
        const auto ps = partitions_of(n);
        if (static_cast<int>(ps.size()) != counts[n]) {
            r.ok = false;
            r.note = "partition count wrong at " + std::to_string(n);
            return r;
        }
        for (const auto &p : ps)
            if (p.conjugate().conjugate() != p || p.conjugate().weight() != n) {
                r.ok = false;
                r.note = "conjugation fails at " + p.to_string();
                return r;
            }
    }
    // cache written twice from a cold start must match byte for byte
    auto &cache = sym::MacdonaldCache::instance();
    const auto dir = std::filesystem::temp_directory_path() / ("macjt-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto write = [&](const std::filesystem::path &p) {
        cache.detach_file();
        cache.clear_memory();
        std::filesystem::remove(p);
        cache.attach_file(p);
        return expansion::render_text(expansion::theorem1_expand({2, 2, 1})) +
               sym::macdonald_Q({2, 2, 1}, 5).to_string() + sym::macdonald_P({3, 1}, 4).to_string();
    };
    auto slurp = [](const std::filesystem::path &p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const std::string out_a = write(dir / "a.jsonl");
    const std::string out_b = write(dir / "b.jsonl");
    cache.detach_file();
    cache.clear_memory();
    cache.attach_file(dir / "a.jsonl");
    const std::string warm = expansion::render_text(expansion::theorem1_expand({2, 2, 1})) +
                             sym::macdonald_Q({2, 2, 1}, 5).to_string() + sym::macdonald_P({3, 1}, 4).to_string();
    const std::string bytes_a = slurp(dir / "a.jsonl");
    cache.detach_file();
    const bool stable = !bytes_a.empty() && bytes_a == slurp(dir / "b.jsonl") && out_a == out_b && out_a == warm;
    std::filesystem::remove_all(dir);
    if (!stable) {
        r.ok = false;
        r.note = "cache is not byte-stable";
        return r;
    }
    r.note = "axioms, counts, conjugation, cache";
    return r;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"Q_(r) Q_mu expansion rebuilds Q_lambda", criterion1},
        {"C equals the inverse Pieri solve termwise", criterion2},
        {"g-product expansion equals the g-basis solve", [] { return suites({"theorem3"}); }},
        {"e-side expansions equal the omega images", [] { return suites({"duality"}); }},
        {"q = t collapse and Jacobi-Trudi", [] { return suites({"schur"}); }},
        {"one-variable coefficient identity", [] { return suites({"lemma2"}); }},
        {"H functional equations", [] { return suites({"lemma1"}); }},
        {"both recurrences for C", [] { return suites({"recurrence5", "remark"}); }},
        {"E and D eigen-equations", [] { return suites({"eigen"}); }},
        {"regularization soundness", [] { return suites({"regularization"}); }},
        {"infrastructure properties", criterion11},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception &e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all &= r.ok;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (r.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << r.note << ", "
             << secs << " s)";
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
