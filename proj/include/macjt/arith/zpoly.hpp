#pragma once
// Sparse polynomials in q,t with integer coefficients.
//
// Terms are kept sorted ascending in graded lexicographic order with q > t,
// so the leading term is always the last one. Exponents are nonnegative.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace macjt::arith {

class ZPoly {
public:
    static constexpr int kExpBits = 21;
    static constexpr int kMaxExp = (1 << kExpBits) - 1;

    struct Term {
        std::uint64_t key = 0;
        mpz_class coeff;

        int q() const noexcept { return static_cast<int>((key >> kExpBits) & kMaxExp); }
        int t() const noexcept { return static_cast<int>(key & kMaxExp); }
        int degree() const noexcept { return static_cast<int>(key >> (2 * kExpBits)); }
    };

    // Packing is additive: key(a) + key(b) == key(a * b) for monomials.
    static std::uint64_t make_key(int q, int t);

    ZPoly() = default;
    explicit ZPoly(const mpz_class &c);
    static ZPoly monomial(const mpz_class &c, int q, int t);
    // Sorts, merges equal exponents and drops zero coefficients.
    static ZPoly from_terms(std::vector<Term> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
    std::size_t size() const noexcept { return terms_.size(); }
    std::span<const Term> terms() const noexcept { return terms_; }
    const Term &lead() const { return terms_.back(); }
    const Term &trail() const { return terms_.front(); }
    mpz_class coeff(int q, int t) const;

    int max_q() const noexcept;
    int min_q() const noexcept;
    int max_t() const noexcept;
    int min_t() const noexcept;
    int degree() const noexcept { return terms_.empty() ? -1 : lead().degree(); }

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly &o) const;
    ZPoly operator-(const ZPoly &o) const;
    ZPoly operator*(const ZPoly &o) const;
    ZPoly &operator+=(const ZPoly &o) { return *this = *this + o; }
    ZPoly &operator-=(const ZPoly &o) { return *this = *this - o; }
    ZPoly &operator*=(const ZPoly &o) { return *this = *this * o; }

    ZPoly scaled(const mpz_class &c) const;
    ZPoly divexact(const mpz_class &c) const;
    // Multiply by q^dq t^dt; negative shifts must keep exponents >= 0.
    ZPoly shifted(int dq, int dt) const;
    ZPoly pow(unsigned k) const;

    // Positive gcd of the coefficients (0 for the zero polynomial).
    mpz_class content() const;
    // Divide out content and make the leading coefficient positive.
    // Returns the signed factor removed (lead sign * content).
    mpz_class make_primitive();

    // Exact division over Z; nullopt when d does not divide *this.
    std::optional<ZPoly> divide_exact(const ZPoly &d) const;

    ZPoly swapped() const;        // q <-> t
    ZPoly q_equals_t() const;     // substitute q := t
    mpq_class evaluate(const mpq_class &q, const mpq_class &t) const;

    // Total order used for canonical sorting of factor lists.
    int compare(const ZPoly &o) const;
    bool operator==(const ZPoly &o) const { return compare(o) == 0; }
    bool operator!=(const ZPoly &o) const { return compare(o) != 0; }
    std::size_t hash() const;

    std::string to_string() const;

private:
    explicit ZPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}

    std::vector<Term> terms_;
};

} // namespace macjt::arith
