#pragma once

#include <string>

#include "kobgeo/verifier.hpp"

namespace kobgeo {

/// Human-readable report: verdict, max deviation, witness and a per-geodesic
/// table.
std::string format_report_text(const VerificationReport& r);

/// The same fields as a canonical JSON document (sorted keys, shortest
/// round-trip floats). An infinite deviation is written as the string "inf".
std::string format_report_structured(const VerificationReport& r);

/// Exit status for a verdict: 0 pass, 1 fail, 2 degenerate-pass.
int verdict_exit_code(Verdict v);

}  // namespace kobgeo
