#include "macjt/symfunc/macdonald.hpp"

#include <fstream>
#include <sstream>

#include "macjt/error.hpp"
#include "macjt/io/json.hpp"

namespace macjt::sym {

MacdonaldCache &MacdonaldCache::instance()
{
    static MacdonaldCache cache;
    return cache;
}

const MacdonaldCache::Entry *MacdonaldCache::find(const Partition &lambda) const
{
    std::shared_lock lock(map_mu_);
    auto it = entries_.find(lambda);
    return it == entries_.end() ? nullptr : &it->second;
}

const MacdonaldCache::Entry &MacdonaldCache::compute(const Partition &lambda)
{
    if (const Entry *e = find(lambda)) return *e;
    std::lock_guard guard(compute_mu_);
    if (const Entry *e = find(lambda)) return *e;

    const int n = lambda.weight();
    SymFunc P = m(lambda, n);
    auto below = partitions_of(n);
    // Ascending order: every P_mu is built from already available lower ones.
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
        const Partition &mu = *it;
        if (mu == lambda || !dominance_leq(mu, lambda)) continue;
        const Entry &lower = compute(mu);
        const QTRational c = scalar_product(P, lower.P) / lower.norm;
        if (!c.is_zero()) P -= lower.P * c;
    }
    Entry e;
    e.norm = scalar_product(P, P);
    e.Q = P * e.norm.inverse();
    e.P = std::move(P);
    {
        std::unique_lock lock(map_mu_);
        auto [pos, inserted] = entries_.emplace(lambda, std::move(e));
        if (inserted) append_record(lambda, pos->second);
        return pos->second;
    }
}

const SymFunc &MacdonaldCache::P(const Partition &lambda) { return compute(lambda).P; }
const SymFunc &MacdonaldCache::Q(const Partition &lambda) { return compute(lambda).Q; }
const QTRational &MacdonaldCache::norm(const Partition &lambda) { return compute(lambda).norm; }

void MacdonaldCache::append_record(const Partition &lambda, const Entry &e)
{
    if (!file_) return;
    std::ofstream out(*file_, std::ios::app);
    for (const char *basis : {"P", "Q"}) {
        const SymFunc &f = basis[0] == 'P' ? e.P : e.Q;
        io::json rec = {{"basis", basis}, {"partition", io::partition_to_json(lambda)},
                        {"expansion", io::symfunc_to_json(f, true)}};
        out << rec.dump() << '\n';
    }
}

std::size_t MacdonaldCache::attach_file(const std::filesystem::path &path)
{
    std::lock_guard guard(compute_mu_);
    std::unique_lock lock(map_mu_);
    file_ = path;
    std::ifstream in(path);
    if (!in) return 0;
    std::string line;
    std::size_t good_bytes = 0, loaded = 0;
    std::map<Partition, std::pair<std::optional<SymFunc>, std::optional<SymFunc>>> pending;
    bool corrupt = false;
    while (std::getline(in, line)) {
        if (in.eof() && !line.empty()) {
            // Last line without newline: an interrupted write.
            corrupt = true;
            break;
        }
        try {
            const io::json rec = io::json::parse(line);
            const Partition lam = io::partition_from_json(rec.at("partition"));
            SymFunc f = io::symfunc_from_json(rec.at("expansion"), lam.weight(), true);
            const std::string basis = rec.at("basis").get<std::string>();
            if (basis == "P")
                pending[lam].first = std::move(f);
            else if (basis == "Q")
                pending[lam].second = std::move(f);
            else
                throw MathError(ErrorCode::ParseError, "unknown basis");
        } catch (const std::exception &) {
            corrupt = true;
            break;
        }
        good_bytes += line.size() + 1;
        ++loaded;
    }
    in.close();
    if (corrupt) std::filesystem::resize_file(path, good_bytes);
    for (auto &[lam, pq] : pending) {
        if (!pq.first || !pq.second || entries_.count(lam)) continue;
        Entry e;
        e.P = std::move(*pq.first);
        e.Q = std::move(*pq.second);
        const auto &[rho, c] = *e.P.terms().begin();
        e.norm = c / e.Q.coeff(rho);
        entries_.emplace(lam, std::move(e));
    }
    return loaded;
}

void MacdonaldCache::detach_file()
{
    std::unique_lock lock(map_mu_);
    file_.reset();
}

std::optional<std::filesystem::path> MacdonaldCache::file() const
{
    std::shared_lock lock(map_mu_);
    return file_;
}

void MacdonaldCache::clear_memory()
{
    std::lock_guard guard(compute_mu_);
    std::unique_lock lock(map_mu_);
    entries_.clear();
}

std::size_t MacdonaldCache::size() const
{
    std::shared_lock lock(map_mu_);
    return entries_.size();
}

SymFunc macdonald_P(const Partition &lambda, int degree_cap)
{
    if (lambda.weight() > degree_cap)
        throw MathError(ErrorCode::DegreeCapExceeded, "P_" + lambda.to_string() + " beyond degree cap");
    return MacdonaldCache::instance().P(lambda).with_cap(degree_cap);
}

SymFunc macdonald_Q(const Partition &lambda, int degree_cap)
{
    if (lambda.weight() > degree_cap)
        throw MathError(ErrorCode::DegreeCapExceeded, "Q_" + lambda.to_string() + " beyond degree cap");
    return MacdonaldCache::instance().Q(lambda).with_cap(degree_cap);
}

QTRational macdonald_norm(const Partition &lambda) { return MacdonaldCache::instance().norm(lambda); }

std::map<Partition, QTRational> expand_in_Q_basis(const SymFunc &f)
{
    std::map<Partition, QTRational> out;
    std::map<int, bool> weights;
    for (const auto &[lam, c] : f.terms()) weights[lam.weight()] = true;
    for (const auto &[n, unused] : weights) {
        const SymFunc part = f.homogeneous(n);
        for (const auto &kappa : partitions_of(n)) {
            QTRational c = scalar_product(part, MacdonaldCache::instance().P(kappa));
            if (!c.is_zero()) out.emplace(kappa, std::move(c));
        }
    }
    return out;
}

} // namespace macjt::sym
