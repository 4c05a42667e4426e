#include "tspec/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace tspec {

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    long long sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be nonincreasing");
        sum += parts_[i];
    }
    if (sum > std::numeric_limits<int>::max())
        throw std::invalid_argument("partition sum overflows");
    n_ = static_cast<int>(sum);
}

Partition Partition::from_runs(std::initializer_list<std::pair<int, int>> runs)
{
    std::vector<int> parts;
    for (auto [value, count] : runs) {
        if (count < 0)
            throw std::invalid_argument("negative repetition count");
        parts.insert(parts.end(), static_cast<std::size_t>(count), value);
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

// ---------------------------------------------------------------------------

PartitionRange::PartitionRange(int n, int max_part, int min_first)
    : n_(n)
    , max_part_(std::min(max_part, n))
    , min_first_(std::max(min_first, 1))
{
    if (n < 0)
        throw std::invalid_argument("cannot partition a negative integer");
}

PartitionRange::iterator PartitionRange::begin() const
{
    iterator it;
    if (n_ == 0) {
        it.done_ = false;
        return it;
    }
    if (max_part_ < min_first_)
        return it;

    Partition first;
    first.parts_.assign(static_cast<std::size_t>(n_ / max_part_), max_part_);
    if (n_ % max_part_)
        first.parts_.push_back(n_ % max_part_);
    first.n_ = n_;

    it = iterator(std::move(first), min_first_);
    it.done_ = false;
    return it;
}

PartitionRange::iterator& PartitionRange::iterator::operator++()
{
    auto& a = current_.parts_;
    int spill = 0;
    while (!a.empty() && a.back() == 1) {
        a.pop_back();
        ++spill;
    }
    if (a.empty()) {
        done_ = true;
        return *this;
    }
    const int v = --a.back();
    spill += 1;
    while (spill >= v) {
        a.push_back(v);
        spill -= v;
    }
    if (spill)
        a.push_back(spill);
    if (a.front() < min_first_)
        done_ = true;
    return *this;
}

PartitionRange enumerate_partitions(int n, int max_n)
{
    if (n < 1)
        throw std::invalid_argument("n must be at least 1, got " + std::to_string(n));
    if (n > max_n)
        throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the configured maximum "
                                 + std::to_string(max_n));
    return PartitionRange(n, n, 1);
}

// ---------------------------------------------------------------------------

Partition conjugate(const Partition& p)
{
    if (p.empty())
        return {};
    std::vector<int> cols(static_cast<std::size_t>(p.front()), 0);
    for (int row : p.parts())
        for (int j = 0; j < row; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

HookGrid hook_lengths(const Partition& p)
{
    const Partition cols = conjugate(p);
    std::vector<std::vector<int>> rows;
    rows.reserve(p.parts().size());
    for (int t = 0; t < p.length(); ++t) {
        const int width = p[t];
        std::vector<int> row(static_cast<std::size_t>(width));
        for (int j = 0; j < width; ++j) {
            const int arm = width - j - 1;
            const int leg = cols[static_cast<std::size_t>(j)] - t - 1;
            row[static_cast<std::size_t>(j)] = arm + leg + 1;
        }
        rows.push_back(std::move(row));
    }
    return HookGrid(std::move(rows));
}

BigInt HookGrid::product() const
{
    // Hooks are small; batch them in a machine word before touching the bignum.
    constexpr std::uint64_t kFlushAbove = std::uint64_t{1} << 48;
    BigInt result = 1;
    std::uint64_t chunk = 1;
    for (const auto& row : rows_) {
        for (int h : row) {
            chunk *= static_cast<std::uint64_t>(h);
            if (chunk >= kFlushAbove) {
                result *= chunk;
                chunk = 1;
            }
        }
    }
    if (chunk != 1)
        result *= chunk;
    return result;
}

namespace {

constexpr int kFactorialCache = 256;

const std::vector<BigInt>& factorial_table()
{
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(kFactorialCache + 1);
        t[0] = 1;
        for (int i = 1; i <= kFactorialCache; ++i)
            t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] * i;
        return t;
    }();
    return table;
}

} // namespace

BigInt factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of a negative number");
    if (n <= kFactorialCache)
        return factorial_table()[static_cast<std::size_t>(n)];
    BigInt r = factorial_table().back();
    for (int i = kFactorialCache + 1; i <= n; ++i)
        r *= i;
    return r;
}

BigInt degree(const Partition& p)
{
    const BigInt hooks = hook_lengths(p).product();
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(factorial(p.n()), hooks, quotient, remainder);
    if (remainder != 0)
        throw InternalError("hook product of " + p.to_string() + " does not divide n!");
    return quotient;
}

} // namespace tspec
