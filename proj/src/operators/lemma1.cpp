#include <random>

#include "macjt/operators/hfunction.hpp"

namespace macjt::ops {

namespace {

class Pool {
public:
    explicit Pool(std::uint64_t seed) : rng_(seed) {}
    mpq_class draw()
    {
        mpq_class x;
        do {
            x = mpq_class(num_(rng_), den_(rng_));
            x.canonicalize();
        } while (x == 0 || x == 1 || x == -1);
        return x;
    }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<int> num_{-40, 40};
    std::uniform_int_distribution<int> den_{1, 17};
};

nlohmann::json point_json(const std::vector<mpq_class> &u, const std::vector<mpq_class> &v, const mpq_class &q,
                          const mpq_class &t)
{
    auto vec = [](const std::vector<mpq_class> &x) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto &e : x) a.push_back(e.get_str());
        return a;
    };
    return {{"q", q.get_str()}, {"t", t.get_str()}, {"u", vec(u)}, {"v", vec(v)}};
}

} // namespace

nlohmann::json Lemma1Report::to_json() const
{
    return {{"lemma", lemma}, {"n", n},   {"samples", samples}, {"seed", seed}, {"rejected", rejected},
            {"failures", failures}, {"passed", passed()}};
}

Lemma1Report check_lemma1(int which, int n, int samples, std::uint64_t seed)
{
    if (n < 1) throw MathError(ErrorCode::IndexOutOfRange, "check_lemma1 needs n >= 1");
    Lemma1Report rep;
    rep.lemma = which == 1 ? "1i" : "1ii";
    rep.n = n;
    rep.seed = seed;
    Pool pool(seed);
    const std::size_t N = static_cast<std::size_t>(n) + 1;
    while (rep.samples < samples) {
        const mpq_class q = pool.draw(), t = pool.draw();
        std::vector<mpq_class> u(N), v(N);
        for (auto &x : u) x = pool.draw();
        for (auto &x : v) x = pool.draw();
        try {
            const auto [lhs, rhs] = lemma1_sides(which, u, v, q, t);
            ++rep.samples;
            if (!apoly_equal(lhs, rhs)) rep.failures.push_back(point_json(u, v, q, t));
        } catch (const MathError &e) {
            if (e.code() != ErrorCode::DegenerateConfig) throw;
            ++rep.rejected;
        }
    }
    return rep;
}

int check_H_vanishing(int n, int samples, std::uint64_t seed)
{
    Pool pool(seed);
    int bad = 0, done = 0;
    while (done < samples) {
        const mpq_class t = pool.draw();
        std::vector<mpq_class> u(static_cast<std::size_t>(n) + 1), v(u.size());
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
            u[i] = pool.draw();
            v[i] = pool.draw();
        }
        u[static_cast<std::size_t>(n)] = 1 / t;
        v[static_cast<std::size_t>(n)] = 0;
        try {
            if (H_det(u, v, t)(mpq_class(-1)) != 0) ++bad;
            ++done;
        } catch (const MathError &e) {
            if (e.code() != ErrorCode::DegenerateConfig) throw;
        }
    }
    return bad;
}

int check_H_substitution(int n, int samples, std::uint64_t seed)
{
    Pool pool(seed);
    int bad = 0, done = 0;
    const std::size_t N = static_cast<std::size_t>(n) + 1;
    while (done < samples) {
        const mpq_class q = pool.draw(), t = pool.draw();
        std::vector<mpq_class> u(N), v(N);
        for (std::size_t i = 0; i + 1 < N; ++i) {
            u[i] = pool.draw();
            v[i] = pool.draw();
        }
        u[N - 1] = pool.draw();
        v[N - 1] = 0;
        std::vector<mpq_class> u1 = u, u2 = u, v2 = v;
        u1[N - 1] = u[N - 1] / q;
        for (std::size_t i = 0; i + 1 < N; ++i) {
            u2[i] = q * u[i];
            v2[i] = q * v[i];
        }
        try {
            const auto a = H_det(u1, v, t);
            const auto b = H_det(u2, v2, t);
            if (!apoly_equal(a, b)) ++bad;
            ++done;
        } catch (const MathError &e) {
            if (e.code() != ErrorCode::DegenerateConfig) throw;
        }
    }
    return bad;
}

} // namespace macjt::ops
