#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpk/bwb.hpp"
#include "gpk/grassmann.hpp"
#include "gpk/motivic.hpp"
#include "gpk/traces.hpp"

namespace gpk::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

// Runs the gpk3 command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// JSON encodings shared by the subcommands. With timings = false every
// wall-clock field is left out, so equal inputs give equal bytes.
nlohmann::ordered_json certificate_json(const SmoothnessCertificate& cert, bool timings);
nlohmann::ordered_json matrix_json(const MatrixFF& m);
nlohmann::ordered_json cohomology_json(const CohomologyAnswer& a);
nlohmann::ordered_json claims_json(const std::vector<ClaimCheck>& claims);
nlohmann::ordered_json trace_json(const TraceReport& r);
nlohmann::ordered_json count_json(const CountReport& r);

}  // namespace gpk::cli
