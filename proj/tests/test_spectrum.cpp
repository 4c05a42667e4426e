#include <doctest.h>

#include <map>
#include <numeric>

#include "tspec/spectrum.hpp"
#include "tspec/witness.hpp"

using namespace tspec;

namespace {

// The eigenvalue as the content sum of the Young diagram: sum over boxes
// (row i, column j) of j - i.
std::int64_t content_sum(const Partition& p)
{
    std::int64_t s = 0;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j)
            s += j - i;
    return s;
}

using Rows = std::vector<std::pair<Eigenvalue, Multiplicity>>;

Rows rows_of(const Spectrum& s) { return {s.entries().begin(), s.entries().end()}; }

BigInt sq(std::int64_t x) { return BigInt(x) * x; }

} // namespace

TEST_CASE("eigenvalue examples")
{
    CHECK(eigenvalue(Partition{2}) == 1);
    CHECK(eigenvalue(Partition{1, 1}) == -1);
    CHECK(eigenvalue(Partition{2, 1}) == 0);
    CHECK(eigenvalue(Partition{4}) == 6);
    CHECK(eigenvalue(Partition{1}) == 0);
}

TEST_CASE("eigenvalue agrees with the content sum and flips sign under conjugation")
{
    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            CAPTURE(p.to_string());
            const Eigenvalue e = eigenvalue(p);
            CHECK(e == content_sum(p));
            CHECK(eigenvalue(conjugate(p)) == -e);
            CHECK(std::abs(e) <= valency(n));
        }
}

TEST_CASE("character_ratio")
{
    for (int n = 2; n <= 10; ++n)
        CHECK(character_ratio(Partition{n}) == CharacterRatio{1, 1});
    CHECK(character_ratio(Partition{1, 1}) == CharacterRatio{-1, 1});
    CHECK(character_ratio(Partition{2, 1}) == CharacterRatio{0, 1});
    CHECK(character_ratio(Partition{3, 1}) == CharacterRatio{1, 3});
    CHECK_THROWS_AS(character_ratio(Partition{1}), std::invalid_argument);

    for (int n = 2; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            const CharacterRatio r = character_ratio(p);
            CHECK(r.denominator > 0);
            CHECK(std::gcd(r.numerator, r.denominator) == 1);
            // r * n(n-1)/2 == eigenvalue, exactly.
            CHECK(r.numerator * valency(n) == eigenvalue(p) * r.denominator);
        }
}

TEST_CASE("eigenvalue_upper_bound")
{
    for (int n = 1; n <= 20; ++n)
        CHECK(eigenvalue_upper_bound(Partition{n}) == valency(n));
    CHECK(eigenvalue_upper_bound(Partition{2, 1}) == 2);
    CHECK(eigenvalue_upper_bound(Partition{2, 1, 1}) == 4);

    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(eigenvalue(p) <= eigenvalue_upper_bound(p));
}

TEST_CASE("small spectra")
{
    CHECK(rows_of(spectrum(1)) == Rows{{0, 1}});
    CHECK(rows_of(spectrum(2)) == Rows{{1, 1}, {-1, 1}});
    CHECK(rows_of(spectrum(3)) == Rows{{3, 1}, {0, 4}, {-3, 1}});
    CHECK(rows_of(spectrum(4)) == Rows{{6, 1}, {2, 9}, {0, 4}, {-2, 9}, {-6, 1}});
}

TEST_CASE("spectrum guards its input")
{
    CHECK_THROWS_AS(spectrum(0), std::invalid_argument);
    CHECK_THROWS_AS(spectrum(81), ResourceLimitError);
    CHECK_THROWS_AS(spectrum(20, {.max_n = 19}), ResourceLimitError);
    CHECK_THROWS_AS(multiplicity(81, 0), ResourceLimitError);
}

TEST_CASE("spectrum invariants hold for n <= 12")
{
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        const InvariantReport r = check_invariants(spectrum(n));
        CHECK(r.total_is_factorial);
        CHECK(r.zero_trace);
        CHECK(r.trace_of_square);
        CHECK(r.symmetric);
        CHECK(r.top_is_valency);
    }
}

TEST_CASE("check_invariants notices a corrupted spectrum")
{
    Spectrum::Entries e = spectrum(4).entries();
    e[2] += 1;
    const InvariantReport r = check_invariants(Spectrum(4, e));
    CHECK_FALSE(r.total_is_factorial);
    CHECK_FALSE(r.symmetric);
    CHECK_FALSE(r.all());
    CHECK(r.top_is_valency);
}

TEST_CASE("multiplicity")
{
    CHECK(multiplicity(8, 0) == 9864);
    CHECK(multiplicity(7, 1) == 441);
    CHECK(multiplicity(4, 5) == 0);
    CHECK(spectrum(4).multiplicity(5) == 0);
    for (int n = 1; n <= 10; ++n) {
        const Spectrum s = spectrum(n);
        for (Eigenvalue v = -valency(n); v <= valency(n); ++v)
            CHECK(multiplicity(n, v) == s.multiplicity(v));
    }
}

TEST_CASE("top_eigenvalues")
{
    CHECK(top_eigenvalues(6, 3) == Rows{{15, 1}, {9, 25}, {5, 81}});
    CHECK(top_eigenvalues(7, 4) == Rows{{21, 1}, {14, 36}, {9, 196}, {7, 225}});
    CHECK(top_eigenvalues(2, 1) == Rows{{1, 1}});
    CHECK(top_eigenvalues(2, 2) == Rows{{1, 1}, {-1, 1}});
    CHECK_THROWS_AS(top_eigenvalues(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(top_eigenvalues(5, 0), std::invalid_argument);
}

TEST_CASE("closed forms for the largest eigenvalues, n up to 30")
{
    for (std::int64_t n = 2; n <= 30; ++n) {
        CAPTURE(n);
        const Spectrum s = spectrum(static_cast<int>(n));
        auto it = s.entries().begin();
        CHECK(it->first == n * (n - 1) / 2);
        CHECK(it->second == 1);
        if (n >= 3) {
            ++it;
            CHECK(it->first == n * (n - 3) / 2);
            CHECK(it->second == sq(n - 1));
        }
        if (n >= 4) {
            ++it;
            CHECK(it->first == (n - 1) * (n - 4) / 2);
            CHECK(it->second == sq(n * (n - 3) / 2));
        }
        if (n >= 7) {
            ++it;
            CHECK(it->first == n * (n - 5) / 2);
            CHECK(it->second == sq((n - 1) * (n - 2) / 2));
        }
    }
}

TEST_CASE("hook eigenvalues and their multiplicity lower bounds")
{
    for (int n = 2; n <= 30; ++n)
        for (int k = 3; k <= n; ++k) {
            const Partition h = hook_partition(n, k);
            CHECK(eigenvalue(h) == static_cast<Eigenvalue>(n) * (n - 2 * k + 1) / 2);
        }

    for (int n = 3; n <= 12; ++n) {
        const Spectrum s = spectrum(n);
        for (int k = 3; k <= n; ++k) {
            const Eigenvalue v = static_cast<Eigenvalue>(n) * (n - 2 * k + 1) / 2;
            const BigInt d = degree(hook_partition(n, k));
            CHECK(s.multiplicity(v) >= d * d);
            // n! / (n (n-k)! (k-1)!), the stated bound read with i = 1.
            const BigInt stated = factorial(n) / (BigInt(n) * factorial(n - k) * factorial(k - 1));
            CHECK(s.multiplicity(v) >= stated);
        }
    }
}

TEST_CASE("parallel sweep is deterministic")
{
    for (int n : {1, 2, 7, 18, 25}) {
        const Spectrum serial = spectrum(n);
        for (unsigned threads : {2u, 3u, 8u, 0u})
            CHECK(spectrum(n, {.threads = threads}) == serial);
        CHECK(multiplicity(n, 0, {.threads = 4}) == serial.multiplicity(0));
    }
}
