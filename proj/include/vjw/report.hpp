#pragma once

#include <string>
#include <vector>

namespace vjw {

// One failed exact identity.  row/col are -1 when the violation is not tied
// to a single entry (e.g. a wrong trace).
struct Violation {
    std::string check;  // e.g. "relation:EF-FE", "intertwiner:K", "idempotent"
    int degree = 0;
    long row = -1;
    long col = -1;
    std::string detail;
};

using Report = std::vector<Violation>;

}  // namespace vjw
