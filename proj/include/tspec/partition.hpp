#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tspec {

using BigInt = boost::multiprecision::cpp_int;

/// Default cap on n for anything that enumerates all partitions of n.
/// p(80) is about 1.6e7, which is still a desk-scale computation.
inline constexpr int kDefaultMaxN = 80;

/// Thrown when a request exceeds the configured enumeration cap.
class ResourceLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Thrown when an exactness invariant breaks (inexact division, odd doubled
/// eigenvalue). Always a bug, never an input problem.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Nonincreasing sequence of positive integers. The empty partition stands
/// for n = 0 only.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts is nonincreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts))
    {}

    /// Builds a partition from (value, count) runs, e.g. {{4,1},{1,3}} is
    /// (4,1,1,1). A count of zero contributes nothing.
    static Partition from_runs(std::initializer_list<std::pair<int, int>> runs);

    std::span<const int> parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int front() const { return parts_.front(); }
    int back() const { return parts_.back(); }

    /// "(3,1,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    friend class PartitionRange;

    std::vector<int> parts_;
    int n_ = 0;
};

/// Partitions of n whose largest part lies in [min_first, max_part], in
/// reverse-lexicographic order. The full set of partitions of n is
/// PartitionRange(n, n, 1); fixing min_first == max_part == f selects the
/// slice whose first part is f, which is how parallel consumers split work.
class PartitionRange {
public:
    PartitionRange(int n, int max_part, int min_first = 1);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int)
        {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const iterator& o) const
        {
            if (done_ || o.done_)
                return done_ == o.done_;
            return current_ == o.current_;
        }

    private:
        friend class PartitionRange;
        iterator(Partition first, int min_first)
            : current_(std::move(first))
            , min_first_(min_first)
        {}

        Partition current_;
        int min_first_ = 1;
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const { return {}; }

private:
    int n_;
    int max_part_;
    int min_first_;
};

/// Every partition of n, from (n) down to (1,...,1).
/// Rejects n < 1 and n > max_n with ResourceLimitError / std::invalid_argument.
PartitionRange enumerate_partitions(int n, int max_n = kDefaultMaxN);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// Ragged grid of hook lengths, row t holding p[t] entries.
class HookGrid {
public:
    explicit HookGrid(std::vector<std::vector<int>> rows)
        : rows_(std::move(rows))
    {}

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int at(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }
    BigInt product() const;

    friend bool operator==(const HookGrid&, const HookGrid&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

HookGrid hook_lengths(const Partition& p);

BigInt factorial(int n);

/// Dimension of the irreducible representation of Sym_n indexed by p:
/// n! divided exactly by the hook product. Throws InternalError on an
/// inexact division.
BigInt degree(const Partition& p);

} // namespace tspec
