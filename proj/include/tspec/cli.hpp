#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tspec::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
};

/// Entry point shared by the tspec executable and the tests. args excludes
/// the program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Golden multiplicities reproduced by `tspec tables`.
struct TableCell {
    int n;
    long long eigenvalue;
    const char* multiplicity;
};
const std::vector<TableCell>& zero_table();
const std::vector<TableCell>& one_table();

} // namespace tspec::cli
