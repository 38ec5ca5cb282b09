#pragma once

#include "vjw/document.hpp"

namespace vjw {

// Computes extended_jw for the configured weights and cutoff; applies the
// full specialization when one is given (all weights must be assigned).
ResultDocument cmd_compute(const JobConfig& config);

// Runs the selected verification suites (all that apply when none are
// selected); the document carries the reports, no blocks.
ResultDocument cmd_verify(const JobConfig& config);

// Computes jw(n) on V_1^{⊗n} over Q(q) together with its idempotence
// report; n is capped by max_n as a resource guard.
ResultDocument cmd_tl(const JobConfig& config, int max_n = 8);

// Loads a previously emitted document and specializes every block at the
// given assignment (which must cover all of the document's weights).
ResultDocument cmd_specialize(const JobConfig& config);

// 0 when every check in the document passed, otherwise the
// verification-failure exit code.
int exit_code_for(const ResultDocument& doc);

}  // namespace vjw
