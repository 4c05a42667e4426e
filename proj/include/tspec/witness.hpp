#pragma once

#include <stdexcept>

#include "tspec/partition.hpp"
#include "tspec/spectrum.hpp"

namespace tspec {

/// Raised when none of the explicit constructions covers (n, target). This
/// says nothing about whether target is an eigenvalue; only spectrum() can
/// decide that.
class NoConstructionKnown : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct WitnessReport {
    int n = 0;
    Eigenvalue target = 0;
    Partition partition;
    bool verified = false;
};

// Each construction throws std::invalid_argument outside its validity region.

/// Eigenvalue 0: ((n+1)/2, 1^((n-1)/2)) for odd n, (n/2, 2, 1^((n-4)/2)) for
/// even n >= 4. n = 2 is rejected because 0 is not an eigenvalue of T_2.
Partition zero_partition(int n);

/// Eigenvalue 1: ((n-1)/2, 3, 1^((n-5)/2)) for odd n >= 7 and
/// ((n-6)/2, 4, 4, 2, 1^((n-14)/2)) for even n >= 14.
Partition one_partition(int n);

/// Eigenvalue lam for odd n, 1 <= lam <= (n-3)/4:
/// ((n-2lam+1)/2, lam+2, 2^(lam-1), 1^((n-4lam-1)/2)).
Partition lambda_partition_odd(int n, int lam);

/// Eigenvalue lam for even n, 1 <= lam <= (n-4)/10:
/// ((n-6lam)/2, 2lam+2, lam+3, 3^(lam-1), 2^lam, 1^((n-10lam-4)/2)).
Partition lambda_partition_even(int n, int lam);

/// The hook (n-k+1, 1^(k-1)), whose eigenvalue is n(n-2k+1)/2.
Partition hook_partition(int n, int k);

/// Smallest n0 from which every m in 0..k is known to be an eigenvalue of
/// T_n: 10k + 4.
int min_n_for_prefix(int k);

/// Picks the applicable construction for (n, target) and checks it with
/// eigenvalue(). Throws NoConstructionKnown when none applies.
WitnessReport verify_witness(int n, Eigenvalue target);

} // namespace tspec
