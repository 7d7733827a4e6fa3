#pragma once

#include <string>
#include <vector>

namespace hypergreen {

struct CheckFailure {
    std::string case_id;
    double residual;
};

// Result of one verification suite; pass() is the acceptance predicate.
struct CheckReport {
    std::string suite;
    long cases = 0;
    double max_residual = 0.0;
    std::vector<CheckFailure> failures;
    long wall_time_ms = 0;
    double tolerance = 0.0;

    bool pass() const { return failures.empty() && max_residual <= tolerance; }
};

// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

double default_tolerance(const std::string& suite);

// Runs one named suite with its default tolerance unless overridden.
CheckReport run_suite(const std::string& suite, double tol_override = -1.0);

// The two halves of the `degenerate` suite, separately tolerated: the
// integer-index degeneration identity alone, and the kernel coincidence
// at second parameter +1/-1 alone.
CheckReport degen_relation_report(double tol);
CheckReport degenerate_kernels_report(double tol);

}  // namespace hypergreen
