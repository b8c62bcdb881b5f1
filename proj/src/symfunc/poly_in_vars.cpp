#include "macjt/symfunc/poly_in_vars.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "macjt/error.hpp"

namespace macjt::sym {

PolyInVars::PolyInVars(int n_vars, const QTRational &c) : n_(n_vars)
{
    if (!c.is_zero()) terms_.emplace(Exponents(static_cast<std::size_t>(n_vars), 0), c);
}

PolyInVars PolyInVars::variable(int n_vars, int i)
{
    Exponents e(static_cast<std::size_t>(n_vars), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(e, QTRational(1));
}

PolyInVars PolyInVars::monomial(const Exponents &exps, const QTRational &c)
{
    PolyInVars p(static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

QTRational PolyInVars::coeff(const Exponents &exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? QTRational() : it->second;
}

int PolyInVars::total_degree() const
{
    int d = -1;
    for (const auto &[e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void PolyInVars::add_term(const Exponents &exps, const QTRational &c)
{
    if (c.is_zero()) return;
    if (static_cast<int>(exps.size()) != n_)
        throw MathError(ErrorCode::IndexOutOfRange, "exponent vector has wrong length");
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyInVars PolyInVars::operator-() const
{
    PolyInVars p(n_);
    for (const auto &[e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

PolyInVars &PolyInVars::operator+=(const PolyInVars &o)
{
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyInVars PolyInVars::operator+(const PolyInVars &o) const
{
    PolyInVars p = *this;
    p += o;
    return p;
}

PolyInVars PolyInVars::operator-(const PolyInVars &o) const { return *this + (-o); }

PolyInVars PolyInVars::operator*(const PolyInVars &o) const
{
    PolyInVars p(n_);
    Exponents e(static_cast<std::size_t>(n_));
    for (const auto &[a, x] : terms_)
        for (const auto &[b, y] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
            p.add_term(e, x * y);
        }
    return p;
}

PolyInVars PolyInVars::operator*(const QTRational &c) const
{
    PolyInVars p(n_);
    if (c.is_zero()) return p;
    for (const auto &[e, x] : terms_) p.terms_.emplace(e, x * c);
    return p;
}

bool PolyInVars::operator==(const PolyInVars &o) const
{
    if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

bool PolyInVars::is_symmetric() const
{
    for (const auto &[e, c] : terms_) {
        Exponents s = e;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            std::swap(s[i], s[i + 1]);
            if (coeff(s) != c) return false;
            std::swap(s[i], s[i + 1]);
        }
    }
    return true;
}

std::string PolyInVars::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")";
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            os << "*x" << (i + 1);
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

PolyInVars expand_in_variables(const SymFunc &f, int n)
{
    PolyInVars out(n);
    for (const auto &[mu, c] : to_m_basis(f)) {
        if (static_cast<int>(mu.length()) > n) continue;
        Exponents e = mu.padded(static_cast<std::size_t>(n));
        std::sort(e.begin(), e.end());
        do {
            out.add_term(e, c);
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return out;
}

PolyInVars coeff_of_last_var(const PolyInVars &p, int power)
{
    if (p.n_vars() < 1) throw MathError(ErrorCode::IndexOutOfRange, "coeff_of_last_var needs a variable");
    PolyInVars out(p.n_vars() - 1);
    for (const auto &[e, c] : p.terms()) {
        if (e.back() != power) continue;
        out.add_term(Exponents(e.begin(), e.end() - 1), c);
    }
    return out;
}

} // namespace macjt::sym
