#pragma once

#include <string>
#include <vector>

namespace grouplab {

// One verified structural claim. Claim ids are stable; downstream suites
// key on them.
struct ClaimResult {
    std::string id;
    std::string statement;
    bool pass = false;
    std::string detail;
};

// Ids of every registered claim, in canonical run order.
std::vector<std::string> claim_ids();

// Runs the selected claims, or all of them when ids is empty. An unknown
// id raises Parse. A claim that throws is reported as a failure, never as
// a crash.
std::vector<ClaimResult> run_claims(const std::vector<std::string>& ids = {});

// Fixed-width text table, one claim per line, optionally ANSI-colored.
std::string claims_table(const std::vector<ClaimResult>& results, bool color);

// The same results as a JSON array.
std::string claims_json(const std::vector<ClaimResult>& results);

}  // namespace grouplab
