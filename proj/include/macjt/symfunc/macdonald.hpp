#pragma once
// Macdonald P and Q functions by Gram-Schmidt against monomials.

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <mutex>

#include "macjt/symfunc/symfunc.hpp"

namespace macjt::sym {

SymFunc macdonald_P(const Partition &lambda, int degree_cap = kDefaultDegreeCap);
SymFunc macdonald_Q(const Partition &lambda, int degree_cap = kDefaultDegreeCap);
// <P_lambda, P_lambda>_{q,t}
QTRational macdonald_norm(const Partition &lambda);

// Coefficients of f in the Q basis: <f, P_kappa> for every kappa in range.
std::map<Partition, QTRational> expand_in_Q_basis(const SymFunc &f);

// Process-wide memo of P/Q, optionally backed by an append-only JSON-lines
// file. Reads may run concurrently; inserts are serialized.
class MacdonaldCache {
public:
    static MacdonaldCache &instance();

    // Loads records from `path` (dropping a corrupt tail) and appends new
    // ones there from now on. Returns the number of records loaded.
    std::size_t attach_file(const std::filesystem::path &path);
    void detach_file();
    std::optional<std::filesystem::path> file() const;
    void clear_memory();
    std::size_t size() const;

    const SymFunc &P(const Partition &lambda);
    const SymFunc &Q(const Partition &lambda);
    const QTRational &norm(const Partition &lambda);

private:
    struct Entry {
        SymFunc P{0};
        SymFunc Q{0};
        QTRational norm;
    };

    MacdonaldCache() = default;
    const Entry *find(const Partition &lambda) const;
    const Entry &compute(const Partition &lambda);
    void append_record(const Partition &lambda, const Entry &e);

    mutable std::shared_mutex map_mu_;
    std::recursive_mutex compute_mu_;
    std::map<Partition, Entry> entries_;
    std::optional<std::filesystem::path> file_;
};

} // namespace macjt::sym
