#pragma once

#include <cstddef>
#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace macjt {

// Arbitrary integer sequence (entries may be negative or increasing).
using Composition = std::vector<int>;

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    // Throws MathError(ParseError) unless weakly decreasing and nonnegative.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }
    // i-th part, 1-based, zero beyond the length.
    int part(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int multiplicity(int i) const noexcept;
    // Parts padded with zeros to `len` entries (len >= length()).
    std::vector<int> padded(std::size_t len) const;

    Partition conjugate() const;

    auto operator<=>(const Partition &o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition &o) const { return parts_ == o.parts_; }

    std::string to_string() const; // "3,2,1"; "" for the empty partition
    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition &p) const noexcept;
};

bool is_partition(const Composition &c);
// Drops trailing zeros; requires is_partition(c).
Partition to_partition(const Composition &c);

mpz_class z_lambda(const Partition &lambda);

// lambda with part k (1-based) decremented; lambda is zero-padded up to k.
Composition remove_one(const Partition &lambda, int k);

// Partitions of n with at most max_length parts, lexicographically descending
// (a linear extension of dominance, largest first).
std::vector<Partition> partitions_of(int n, int max_length);
std::vector<Partition> partitions_of(int n);

bool dominance_leq(const Partition &mu, const Partition &lambda);

} // namespace macjt
