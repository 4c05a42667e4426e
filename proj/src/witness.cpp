#include "tspec/witness.hpp"

#include <string>

namespace tspec {

namespace {

[[noreturn]] void reject(const std::string& what, int n)
{
    throw std::invalid_argument(what + " (n = " + std::to_string(n) + ")");
}

bool odd(int n) { return n % 2 != 0; }

} // namespace

Partition zero_partition(int n)
{
    if (n < 1)
        reject("zero witness needs n >= 1", n);
    if (n == 2)
        reject("0 is not an eigenvalue of T_2", n);
    if (odd(n))
        return Partition::from_runs({{(n + 1) / 2, 1}, {1, (n - 1) / 2}});
    return Partition::from_runs({{n / 2, 1}, {2, 1}, {1, (n - 4) / 2}});
}

Partition one_partition(int n)
{
    if (odd(n) && n >= 7)
        return Partition::from_runs({{(n - 1) / 2, 1}, {3, 1}, {1, (n - 5) / 2}});
    if (!odd(n) && n >= 14)
        return Partition::from_runs({{(n - 6) / 2, 1}, {4, 2}, {2, 1}, {1, (n - 14) / 2}});
    reject("eigenvalue-one witness needs odd n >= 7 or even n >= 14", n);
}

Partition lambda_partition_odd(int n, int lam)
{
    if (!odd(n) || n < 7)
        reject("odd construction needs odd n >= 7", n);
    if (lam < 1 || lam > (n - 3) / 4)
        reject("odd construction needs 1 <= lambda <= (n-3)/4, got lambda = " + std::to_string(lam), n);
    return Partition::from_runs({
        {(n - 2 * lam + 1) / 2, 1},
        {lam + 2, 1},
        {2, lam - 1},
        {1, (n - 4 * lam - 1) / 2},
    });
}

Partition lambda_partition_even(int n, int lam)
{
    if (odd(n) || n < 14)
        reject("even construction needs even n >= 14", n);
    if (lam < 1 || lam > (n - 4) / 10)
        reject("even construction needs 1 <= lambda <= (n-4)/10, got lambda = " + std::to_string(lam), n);
    return Partition::from_runs({
        {(n - 6 * lam) / 2, 1},
        {2 * lam + 2, 1},
        {lam + 3, 1},
        {3, lam - 1},
        {2, lam},
        {1, (n - 10 * lam - 4) / 2},
    });
}

Partition hook_partition(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        reject("hook needs 1 <= k <= n, got k = " + std::to_string(k), n);
    return Partition::from_runs({{n - k + 1, 1}, {1, k - 1}});
}

int min_n_for_prefix(int k)
{
    if (k < 0)
        throw std::invalid_argument("prefix length must be nonnegative");
    return 10 * k + 4;
}

WitnessReport verify_witness(int n, Eigenvalue target)
{
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");

    Partition p;
    if (target == 0) {
        if (n == 2)
            throw NoConstructionKnown("no construction known (0 is not an eigenvalue of T_2)");
        p = zero_partition(n);
    } else if (target == 1 && ((odd(n) && n >= 7) || (!odd(n) && n >= 14))) {
        p = one_partition(n);
    } else if (target >= 1 && odd(n) && n >= 7 && target <= (n - 3) / 4) {
        p = lambda_partition_odd(n, static_cast<int>(target));
    } else if (target >= 1 && !odd(n) && n >= 14 && target <= (n - 4) / 10) {
        p = lambda_partition_even(n, static_cast<int>(target));
    } else {
        throw NoConstructionKnown("no construction known for eigenvalue " + std::to_string(target)
                                  + " of T_" + std::to_string(n));
    }

    WitnessReport report{n, target, p, false};
    report.verified = p.n() == n && eigenvalue(p) == target;
    return report;
}

} // namespace tspec
