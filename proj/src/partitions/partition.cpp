#include "macjt/partitions/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "macjt/error.hpp"

namespace macjt {

namespace {

void strip_zeros(std::vector<int> &v)
{
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void generate(int n, int max_part, int max_len, std::vector<int> &cur, std::vector<Partition> &out)
{
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        generate(n - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    strip_zeros(parts_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw MathError(ErrorCode::ParseError, "not a partition: " + to_string());
        weight_ += parts_[i];
    }
}

int Partition::multiplicity(int i) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::padded(std::size_t len) const
{
    std::vector<int> v = parts_;
    if (v.size() < len) v.resize(len, 0);
    return v;
}

Partition Partition::conjugate() const
{
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> v;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return {};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = std::min(text.find(',', pos), text.size());
        std::string_view tok = text.substr(pos, next - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int x = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw MathError(ErrorCode::ParseError, "bad partition entry '" + std::string(tok) + "'");
        v.push_back(x);
        pos = next + 1;
    }
    return Partition(std::move(v));
}

std::size_t PartitionHash::operator()(const Partition &p) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

bool is_partition(const Composition &c)
{
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0) return false;
        if (i + 1 < c.size() && c[i] < c[i + 1]) return false;
    }
    return true;
}

Partition to_partition(const Composition &c) { return Partition(c); }

mpz_class z_lambda(const Partition &lambda)
{
    mpz_class z = 1;
    const auto &p = lambda.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const unsigned long m = j - i;
        mpz_class f, pw;
        mpz_fac_ui(f.get_mpz_t(), m);
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), m);
        z *= f * pw;
        i = j;
    }
    return z;
}

Composition remove_one(const Partition &lambda, int k)
{
    if (k < 1) throw MathError(ErrorCode::IndexOutOfRange, "remove_one index " + std::to_string(k));
    Composition c = lambda.padded(static_cast<std::size_t>(k));
    --c[static_cast<std::size_t>(k - 1)];
    return c;
}

std::vector<Partition> partitions_of(int n, int max_length)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    generate(n, n, max_length, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

bool dominance_leq(const Partition &mu, const Partition &lambda)
{
    if (mu.weight() != lambda.weight())
        throw MathError(ErrorCode::WeightMismatch, "dominance between " + mu.to_string() + " and " + lambda.to_string());
    int a = 0, b = 0;
    const std::size_t len = std::max(mu.length(), lambda.length());
    for (std::size_t i = 0; i < len; ++i) {
        a += mu[i];
        b += lambda[i];
        if (a > b) return false;
    }
    return true;
}

} // namespace macjt
