#include "tspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace tspec::oracle {

namespace {

std::size_t small_factorial(int n)
{
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::size_t>(i);
    return f;
}

int parity(std::span<const int> perm)
{
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            inversions += perm[i] > perm[j];
    return inversions % 2;
}

} // namespace

std::size_t rank_permutation(std::span<const int> perm)
{
    const int n = static_cast<int>(perm.size());
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (int j = i + 1; j < n; ++j)
            smaller += perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)];
        rank += smaller * small_factorial(n - 1 - i);
    }
    return rank;
}

std::vector<int> unrank_permutation(int n, std::size_t rank)
{
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> perm;
    perm.reserve(pool.size());
    for (int i = n - 1; i >= 0; --i) {
        const std::size_t f = small_factorial(i);
        const std::size_t idx = rank / f;
        rank %= f;
        perm.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return perm;
}

CayleyGraph build_graph(int n)
{
    if (n < kMinN || n > kMaxN)
        throw std::invalid_argument("oracle graph needs " + std::to_string(kMinN) + " <= n <= "
                                    + std::to_string(kMaxN) + ", got " + std::to_string(n));
    CayleyGraph g;
    g.n_ = n;
    g.order_ = small_factorial(n);
    g.adj_.assign(g.order_ * g.order_, 0);

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t u = 0;
    do {
        // Right multiplication by the transposition (i j) swaps positions i, j.
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> w = perm;
                std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(j)]);
                g.adj_[u * g.order_ + rank_permutation(w)] = 1;
            }
        }
        ++u;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return g;
}

std::size_t CayleyGraph::vertex_degree(std::size_t u) const
{
    const auto row = adj_.begin() + static_cast<std::ptrdiff_t>(u * order_);
    return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(order_), 1));
}

std::size_t CayleyGraph::edge_count() const
{
    std::size_t e = 0;
    for (std::size_t u = 0; u < order_; ++u)
        for (std::size_t v = u + 1; v < order_; ++v)
            e += adjacent(u, v);
    return e;
}

bool CayleyGraph::is_symmetric() const
{
    for (std::size_t u = 0; u < order_; ++u)
        for (std::size_t v = u + 1; v < order_; ++v)
            if (adjacent(u, v) != adjacent(v, u))
                return false;
    return true;
}

bool CayleyGraph::has_zero_diagonal() const
{
    for (std::size_t u = 0; u < order_; ++u)
        if (adjacent(u, u))
            return false;
    return true;
}

bool CayleyGraph::is_regular(std::size_t degree) const
{
    for (std::size_t u = 0; u < order_; ++u)
        if (vertex_degree(u) != degree)
            return false;
    return true;
}

bool CayleyGraph::is_connected() const
{
    if (order_ == 0)
        return true;
    std::vector<bool> seen(order_, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t v = 0; v < order_; ++v) {
            if (adjacent(u, v) && !seen[v]) {
                seen[v] = true;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == order_;
}

bool CayleyGraph::is_bipartite() const
{
    std::vector<int> colour(order_, -1);
    for (std::size_t start = 0; start < order_; ++start) {
        if (colour[start] != -1)
            continue;
        colour[start] = parity(unrank_permutation(n_, start));
        std::queue<std::size_t> q;
        q.push(start);
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < order_; ++v) {
                if (!adjacent(u, v))
                    continue;
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    q.push(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    for (std::size_t v = 0; v < order_; ++v)
        if (colour[v] != parity(unrank_permutation(n_, v)))
            return false;
    return true;
}

Eigen::MatrixXd CayleyGraph::adjacency_matrix() const
{
    const auto size = static_cast<Eigen::Index>(order_);
    Eigen::MatrixXd a(size, size);
    for (Eigen::Index u = 0; u < size; ++u)
        for (Eigen::Index v = 0; v < size; ++v)
            a(u, v) = adj_[static_cast<std::size_t>(u) * order_ + static_cast<std::size_t>(v)];
    return a;
}

void CayleyGraph::write_edge_list(std::ostream& out) const
{
    for (std::size_t u = 0; u < order_; ++u)
        for (std::size_t v = u + 1; v < order_; ++v)
            if (adjacent(u, v))
                out << u << ' ' << v << '\n';
}

NumericSpectrum numeric_spectrum(const CayleyGraph& g, double tolerance)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency_matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver did not converge for n = " + std::to_string(g.n()));

    NumericSpectrum out;
    const Eigen::VectorXd& ev = solver.eigenvalues();
    out.values.assign(ev.data(), ev.data() + ev.size());
    std::sort(out.values.begin(), out.values.end(), std::greater<>());

    for (double x : out.values) {
        if (std::abs(x - std::round(x)) > tolerance) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "eigenvalue " << x << " of T_" << g.n() << " is not within " << tolerance
                << " of an integer";
            throw IntegralityError(msg.str());
        }
    }
    return out;
}

Comparison compare(const Spectrum& exact, const NumericSpectrum& numeric, double tolerance)
{
    const BigInt order = factorial(exact.n());
    if (BigInt(numeric.values.size()) != order) {
        throw std::invalid_argument("size mismatch: exact spectrum of T_" + std::to_string(exact.n())
                                    + " has " + order.str() + " eigenvalues, numeric has "
                                    + std::to_string(numeric.values.size()));
    }

    Comparison report;
    std::map<Eigenvalue, std::size_t, std::greater<>> counts;
    for (double x : numeric.values) {
        const long long nearest = std::llround(x);
        const double dev = std::abs(x - static_cast<double>(nearest));
        report.max_deviation = std::max(report.max_deviation, dev);
        if (dev > tolerance) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "numeric eigenvalue " << x << " deviates from " << nearest << " by " << dev;
            report.discrepancies.push_back(msg.str());
            return report;
        }
        ++counts[static_cast<Eigenvalue>(nearest)];
    }

    for (const auto& [value, mul] : exact.entries()) {
        const auto it = counts.find(value);
        const std::size_t got = it == counts.end() ? 0 : it->second;
        if (BigInt(got) != mul)
            report.discrepancies.push_back("eigenvalue " + std::to_string(value) + ": exact multiplicity "
                                           + mul.str() + ", numeric " + std::to_string(got));
    }
    for (const auto& [value, got] : counts)
        if (!exact.contains(value))
            report.discrepancies.push_back("eigenvalue " + std::to_string(value) + ": exact multiplicity 0, numeric "
                                           + std::to_string(got));

    report.agreement = report.discrepancies.empty();
    return report;
}

} // namespace tspec::oracle
