#pragma once

#include "kleinian/fixtures.hpp"

#include <string>
#include <vector>

namespace kleinian {

enum class CheckStatus { Pass, Fail, Flagged };

std::string check_status_name(CheckStatus s);

/// One named check with its oracle: either a fixture table or an independent
/// cross-module computation, recorded in `provenance`.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string expected;
    std::string actual;
    std::string provenance;
};

struct VerificationCase {
    Family family;
    int rank = 0;
    std::vector<CheckResult> checks;

    /// Flagged errata do not fail a case.
    bool passed() const;
    std::string label() const;
};

/// Run the whole cross-verification pipeline for one family and rank:
/// group order, character table orthogonality, McKay graph against the
/// reference diagram, affine identities, both Milnor-number routes, the
/// spectrum against the printed table (with the D-family erratum rule),
/// Coxeter exponents against the spectrum, and the orbifold sector report.
/// Internal-consistency errors abort with a diagnostic naming the check.
VerificationCase run_verification(Family family, int rank, const FixtureTables& fixtures);

/// Every case with rank up to max_rank: A(1..max), D(4..max), E6, E7, E8.
std::vector<VerificationCase> run_all(int max_rank, const FixtureTables& fixtures);

} // namespace kleinian
