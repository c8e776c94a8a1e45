#pragma once

#include <iosfwd>
#include <string>

#include "maxtsp/certificate.hpp"
#include "maxtsp/tour.hpp"

namespace maxtsp::cli {

/// Entry point shared by the executable and the tests.
///
/// Exit status: 0 on success (and, for `validate`, a passing instance);
/// 1 for solver or I/O failures and failed validation; 2 for usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Flat `key = value` block: tour, weight, then the certificate.
std::string format_solution_text(const Tour& tour, const Certificate& cert);

/// JSON object with a fixed key set; absent certificate fields are null.
std::string format_solution_json(const Tour& tour, const Certificate& cert);

}  // namespace maxtsp::cli
