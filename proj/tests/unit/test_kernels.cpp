#include <gtest/gtest.h>

#include <map>
#include <random>
#include <vector>

#include "macjt/arith/kernels.hpp"
#include "macjt/arith/zpoly.hpp"

using namespace macjt;
using arith::ZPoly;

namespace {

std::vector<kernels::Isa> supported_isas()
{
    std::vector<kernels::Isa> out{kernels::Isa::scalar};
    if (kernels::detected_isa() != kernels::Isa::scalar) out.push_back(kernels::detected_isa());
    return out;
}

struct IsaGuard {
    kernels::Isa saved = kernels::active_isa();
    ~IsaGuard() { kernels::set_active_isa(saved); }
};

} // namespace

TEST(Kernels, AxpyVariantsAgree)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> val(-1000, 1000);
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 15u, 16u, 17u, 33u, 100u}) {
        std::vector<double> src(n), base(n);
        for (auto &x : src) x = val(rng);
        for (auto &x : base) x = val(rng);
        const double a = val(rng);
        std::vector<double> ref = base;
        kernels::axpy_scalar(ref.data(), src.data(), a, n);
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(ref[i], base[i] + a * src[i]);
#if defined(__x86_64__)
        if (kernels::detected_isa() == kernels::Isa::avx2) {
            std::vector<double> v = base;
            kernels::axpy_avx2(v.data(), src.data(), a, n);
            EXPECT_EQ(v, ref) << "n=" << n;
        }
#endif
#if defined(__aarch64__)
        std::vector<double> v = base;
        kernels::axpy_neon(v.data(), src.data(), a, n);
        EXPECT_EQ(v, ref) << "n=" << n;
#endif
    }
}

TEST(Kernels, Conv2dMatchesIntegerReference)
{
    IsaGuard guard;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dim(1, 9);
    std::uniform_int_distribution<int> val(-50, 50);
    for (auto isa : supported_isas()) {
        ASSERT_EQ(kernels::set_active_isa(isa), isa);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t ar = dim(rng), ac = dim(rng), br = dim(rng), bc = dim(rng);
            std::vector<std::int64_t> ai(ar * ac), bi(br * bc), ci((ar + br - 1) * (ac + bc - 1), 0);
            for (auto &x : ai) x = (trial % 3 == 0 && val(rng) > 20) ? 0 : val(rng);
            for (auto &x : bi) x = val(rng);
            std::vector<double> ad(ai.begin(), ai.end()), bd(bi.begin(), bi.end()), cd(ci.size(), 0.0);
            kernels::conv2d_reference(ai.data(), ar, ac, bi.data(), br, bc, ci.data());
            kernels::conv2d(ad.data(), ar, ac, bd.data(), br, bc, cd.data());
            for (std::size_t i = 0; i < ci.size(); ++i)
                ASSERT_EQ(static_cast<std::int64_t>(cd[i]), ci[i]) << kernels::isa_name(isa);
        }
    }
}

TEST(Kernels, PolynomialProductIndependentOfIsa)
{
    IsaGuard guard;
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> e(0, 12);
    std::uniform_int_distribution<int> c(-30, 30);
    auto random_poly = [&](int terms) {
        std::vector<ZPoly::Term> t;
        for (int i = 0; i < terms; ++i) t.push_back({ZPoly::make_key(e(rng), e(rng)), mpz_class(c(rng))});
        return ZPoly::from_terms(std::move(t));
    };
    for (int trial = 0; trial < 50; ++trial) {
        const ZPoly a = random_poly(25), b = random_poly(30);
        std::map<std::pair<int, int>, mpz_class> naive;
        for (const auto &x : a.terms())
            for (const auto &y : b.terms()) naive[{x.q() + y.q(), x.t() + y.t()}] += x.coeff * y.coeff;
        std::vector<ZPoly::Term> nt;
        for (const auto &[k, v] : naive) nt.push_back({ZPoly::make_key(k.first, k.second), v});
        const ZPoly expected = ZPoly::from_terms(std::move(nt));
        for (auto isa : supported_isas()) {
            kernels::set_active_isa(isa);
            EXPECT_EQ(a * b, expected) << kernels::isa_name(isa);
        }
    }
}

TEST(Kernels, LargeCoefficientsUseExactFallback)
{
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    const ZPoly a = ZPoly::monomial(big, 0, 0) + ZPoly::monomial(1, 1, 0);
    const ZPoly b = ZPoly::monomial(big, 0, 0) - ZPoly::monomial(1, 1, 0);
    EXPECT_EQ(a * b, ZPoly::monomial(big * big, 0, 0) - ZPoly::monomial(1, 2, 0));
}
