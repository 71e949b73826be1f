#pragma once

namespace varkit {

// Process-wide resource limits. Defaults come from the environment
// (VARKIT_MAX_GROUP, VARKIT_MAX_DEGREE, VARKIT_MAX_ASSIGN); callers may
// tighten them afterwards but should not raise them above the environment.
struct Config {
  long max_group = 20000;           // finite-group closure size
  int max_degree = 6;               // multilinear degree n (P_n has n! coordinates)
  long long max_assign = 10000000;  // exhaustive identity-check assignments
  int max_ambient = 100000;         // rows/cols of any single matrix

  // Truncation degree allowed for series over the given alphabet size;
  // term counts grow like letters^cutoff.
  int cutoff_cap(int letters) const;
};

Config& config();

} // namespace varkit
