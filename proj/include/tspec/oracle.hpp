#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tspec/spectrum.hpp"

// Brute-force route: build T_n explicitly and diagonalise it numerically.
// Nothing in here may use partitions or characters.

namespace tspec::oracle {

inline constexpr int kMinN = 2;
inline constexpr int kMaxN = 6;
inline constexpr double kDefaultTolerance = 1e-6;

/// Thrown when a numeric eigenvalue is not within tolerance of an integer.
class IntegralityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lexicographic rank of a permutation of {0,...,n-1} (Lehmer code).
std::size_t rank_permutation(std::span<const int> perm);
std::vector<int> unrank_permutation(int n, std::size_t rank);

/// Cayley graph of Sym_n with respect to all transpositions. Vertex r is the
/// permutation of lexicographic rank r, so vertex 0 is the identity.
class CayleyGraph {
public:
    int n() const noexcept { return n_; }
    std::size_t order() const noexcept { return order_; }

    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * order_ + v] != 0; }
    std::size_t vertex_degree(std::size_t u) const;
    std::size_t edge_count() const;

    bool is_symmetric() const;
    bool has_zero_diagonal() const;
    /// True when every vertex has exactly `degree` neighbours.
    bool is_regular(std::size_t degree) const;
    bool is_connected() const;
    /// Two-colours the graph by BFS and checks that the colouring is
    /// consistent and coincides with permutation parity.
    bool is_bipartite() const;

    Eigen::MatrixXd adjacency_matrix() const;

    /// One "u v" line per edge, zero-based ranks, u < v, ascending.
    void write_edge_list(std::ostream& out) const;

private:
    friend CayleyGraph build_graph(int n);

    int n_ = 0;
    std::size_t order_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Rejects n outside [kMinN, kMaxN] with std::invalid_argument.
CayleyGraph build_graph(int n);

struct NumericSpectrum {
    std::vector<double> values;  ///< descending
};

/// Dense symmetric eigensolve. Throws std::runtime_error on solver failure
/// and IntegralityError if any eigenvalue strays more than tolerance from an
/// integer.
NumericSpectrum numeric_spectrum(const CayleyGraph& g, double tolerance = kDefaultTolerance);

struct Comparison {
    bool agreement = false;
    double max_deviation = 0.0;  ///< largest |value - nearest integer|
    std::vector<std::string> discrepancies;
};

/// Rounds each numeric eigenvalue half away from zero and compares the
/// resulting multiset with the exact one. A deviation above tolerance stops
/// the comparison. Throws std::invalid_argument if the sizes disagree.
Comparison compare(const Spectrum& exact, const NumericSpectrum& numeric,
                   double tolerance = kDefaultTolerance);

} // namespace tspec::oracle
