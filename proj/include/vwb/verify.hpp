#pragma once

#include "vwb/report.hpp"

#include <string>
#include <vector>

namespace vwb {

/// Grid bounds for the cross-module invariant sweep. Separations run over
/// 0..grid_kmax, twists over the module-appropriate subset of 0..grid_dmax,
/// split cells over m <= d, random draws over seeds 1..seeds.
struct VerifyOptions {
  int grid_dmax = 4;
  int grid_kmax = 6;
  int seeds = 3;
};

struct SectionResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions
  bool pass() const { return failures == 0; }
};

/// Outcome of the sweep. `discrepancies` lists every grid cell where the two
/// h^1 conventions disagree; such cells are expected and do not fail the run.
struct VerifyResult {
  std::vector<SectionResult> sections;
  std::vector<Discrepancy> discrepancies;
  long long total_checks = 0;
  bool all_pass = true;
};

VerifyResult run_verify(const VerifyOptions& opt);

/// The same sweep packaged as a deterministic report (byte-identical across
/// runs for equal options).
Report verify_report(const VerifyOptions& opt);

}  // namespace vwb
