#include "tspec/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

namespace tspec {

Eigenvalue eigenvalue(const Partition& p)
{
    std::int64_t doubled = 0;
    std::int64_t row = 1;
    for (int part : p.parts()) {
        doubled += static_cast<std::int64_t>(part) * (part - 2 * row + 1);
        ++row;
    }
    if (doubled % 2 != 0)
        throw InternalError("odd doubled eigenvalue for " + p.to_string());
    return doubled / 2;
}

CharacterRatio character_ratio(const Partition& p)
{
    if (p.n() < 2)
        throw std::invalid_argument("character ratio needs n >= 2 (no transpositions in Sym_1)");
    const std::int64_t num = eigenvalue(p);
    const std::int64_t den = valency(p.n());
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

Eigenvalue eigenvalue_upper_bound(const Partition& p)
{
    const std::int64_t n = p.n();
    const std::int64_t k = p.length();
    const std::int64_t last = p.back();
    const std::int64_t doubled = (n - last) * (n - last + 1) + last * (last - 2 * k + 1);
    return doubled / 2;
}

Multiplicity Spectrum::multiplicity(Eigenvalue value) const
{
    auto it = entries_.find(value);
    return it == entries_.end() ? Multiplicity{0} : it->second;
}

InvariantReport check_invariants(const Spectrum& s)
{
    InvariantReport r;
    const auto& e = s.entries();
    const BigInt order = factorial(s.n());

    BigInt total = 0;
    BigInt trace = 0;
    BigInt trace_sq = 0;
    for (const auto& [value, mul] : e) {
        total += mul;
        trace += mul * value;
        trace_sq += mul * value * value;
    }
    r.total_is_factorial = total == order;
    r.zero_trace = trace == 0;
    r.trace_of_square = trace_sq == order * valency(s.n());

    r.symmetric = std::all_of(e.begin(), e.end(), [&](const auto& entry) {
        return s.multiplicity(-entry.first) == entry.second;
    });

    r.top_is_valency = !e.empty() && e.begin()->first == valency(s.n()) && e.begin()->second == 1;
    return r;
}

namespace {

// Runs visit(partition, bucket) over every partition of n, where bucket is a
// worker-local map. Work is split by first part; merging adds buckets, which
// is order-independent, so the result does not depend on the thread count.
template <typename Visit>
Spectrum::Entries sweep(int n, const SpectrumOptions& options, Visit visit)
{
    (void)enumerate_partitions(n, options.max_n);

    unsigned workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    workers = std::clamp(workers, 1u, static_cast<unsigned>(n));

    if (workers == 1) {
        Spectrum::Entries out;
        for (const Partition& p : PartitionRange(n, n, 1))
            visit(p, out);
        return out;
    }

    std::atomic<int> next_first{n};
    std::vector<Spectrum::Entries> partials(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int f = next_first--; f >= 1; f = next_first--)
                        for (const Partition& p : PartitionRange(n, f, f))
                            visit(p, partials[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& err : errors)
        if (err)
            std::rethrow_exception(err);

    Spectrum::Entries out;
    for (auto& part : partials)
        for (auto& [value, mul] : part)
            out[value] += mul;
    return out;
}

} // namespace

Spectrum spectrum(int n, const SpectrumOptions& options)
{
    auto entries = sweep(n, options, [](const Partition& p, Spectrum::Entries& bucket) {
        const BigInt d = degree(p);
        bucket[eigenvalue(p)] += d * d;
    });
    return Spectrum(n, std::move(entries));
}

Multiplicity multiplicity(int n, Eigenvalue value, const SpectrumOptions& options)
{
    auto entries = sweep(n, options, [value](const Partition& p, Spectrum::Entries& bucket) {
        if (eigenvalue(p) != value)
            return;
        const BigInt d = degree(p);
        bucket[value] += d * d;
    });
    auto it = entries.find(value);
    return it == entries.end() ? Multiplicity{0} : it->second;
}

std::vector<std::pair<Eigenvalue, Multiplicity>>
top_eigenvalues(int n, int count, const SpectrumOptions& options)
{
    if (count < 1)
        throw std::invalid_argument("count must be at least 1");
    const Spectrum s = spectrum(n, options);
    if (static_cast<std::size_t>(count) > s.distinct())
        throw std::invalid_argument("T_" + std::to_string(n) + " has only " + std::to_string(s.distinct())
                                    + " distinct eigenvalues, " + std::to_string(count) + " requested");
    std::vector<std::pair<Eigenvalue, Multiplicity>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (const auto& [value, mul] : s.entries()) {
        if (out.size() == static_cast<std::size_t>(count))
            break;
        out.emplace_back(value, mul);
    }
    return out;
}

} // namespace tspec
