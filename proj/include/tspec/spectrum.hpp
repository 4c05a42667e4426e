#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "tspec/partition.hpp"

namespace tspec {

/// Adjacency eigenvalue of the transposition graph T_n. Bounded in absolute
/// value by n(n-1)/2, so 64 bits is plenty for any enumerable n.
using Eigenvalue = std::int64_t;

/// Eigenvalue multiplicity; reaches n!-scale, hence arbitrary precision.
using Multiplicity = BigInt;

/// chi(tau) / chi(identity) for a transposition tau, in lowest terms with a
/// positive denominator.
struct CharacterRatio {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    friend bool operator==(const CharacterRatio&, const CharacterRatio&) = default;
};

/// Number of transpositions in Sym_n, i.e. the valency of T_n.
constexpr std::int64_t valency(int n) noexcept
{
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

/// Sum over rows j (1-based) of n_j (n_j - 2j + 1) / 2. The doubled sum is
/// always even; an odd one raises InternalError.
Eigenvalue eigenvalue(const Partition& p);

/// Throws std::invalid_argument for n < 2, where there are no transpositions.
CharacterRatio character_ratio(const Partition& p);

/// ((n - n_k)(n - n_k + 1) + n_k (n_k - 2k + 1)) / 2 where n_k is the last
/// of the k parts. Never below eigenvalue(p).
Eigenvalue eigenvalue_upper_bound(const Partition& p);

struct SpectrumOptions {
    int max_n = kDefaultMaxN;
    /// Worker count for the partition sweep; 0 means hardware concurrency.
    unsigned threads = 1;
};

/// Distinct eigenvalues of T_n with exact multiplicities, largest first.
class Spectrum {
public:
    using Entries = std::map<Eigenvalue, Multiplicity, std::greater<>>;

    Spectrum(int n, Entries entries)
        : n_(n)
        , entries_(std::move(entries))
    {}

    int n() const noexcept { return n_; }
    const Entries& entries() const noexcept { return entries_; }
    std::size_t distinct() const noexcept { return entries_.size(); }

    bool contains(Eigenvalue value) const { return entries_.contains(value); }
    /// Zero when value is not an eigenvalue.
    Multiplicity multiplicity(Eigenvalue value) const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    int n_;
    Entries entries_;
};

/// The five identities every spectrum of T_n satisfies.
struct InvariantReport {
    bool total_is_factorial = false;  ///< sum of multiplicities == n!
    bool zero_trace = false;          ///< sum of lambda * mul == 0
    bool trace_of_square = false;     ///< sum of lambda^2 * mul == n! * n(n-1)/2
    bool symmetric = false;           ///< mul(lambda) == mul(-lambda)
    bool top_is_valency = false;      ///< largest is n(n-1)/2, multiplicity 1

    bool all() const noexcept
    {
        return total_is_factorial && zero_trace && trace_of_square && symmetric && top_is_valency;
    }
};

InvariantReport check_invariants(const Spectrum& s);

/// Full spectrum of T_n. The result is independent of options.threads.
Spectrum spectrum(int n, const SpectrumOptions& options = {});

/// Multiplicity of one value; only partitions hitting that value pay for a
/// degree computation.
Multiplicity multiplicity(int n, Eigenvalue value, const SpectrumOptions& options = {});

/// The count largest distinct eigenvalues with multiplicities, descending.
/// Throws std::invalid_argument if count < 1 or T_n has fewer distinct
/// eigenvalues.
std::vector<std::pair<Eigenvalue, Multiplicity>>
top_eigenvalues(int n, int count, const SpectrumOptions& options = {});

} // namespace tspec
