#ifndef NCGEO_VERIFY_SUITE_HPP
#define NCGEO_VERIFY_SUITE_HPP

#include <string>
#include <vector>

namespace ncgeo {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double residual = 0.0;  // worst observed residual, criterion-specific units
    double threshold = 0.0; // the gate it was held to
    std::string detail;
};

struct VerifyReport {
    unsigned long seed = 0;
    std::vector<CriterionResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

// Runs the full acceptance battery; deterministic for a fixed seed.
VerifyReport run_verify_suite(unsigned long seed);

} // namespace ncgeo

#endif
