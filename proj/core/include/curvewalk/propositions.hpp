#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvewalk/finite_space.hpp"

namespace curvewalk {

// Executable halfspace geometry: each named statement is instantiated on the
// given space with the working hyperbolicity constant and checked on every
// hypothesis-satisfying tuple (or a seeded uniform sample of tuples on larger
// spaces). A violation is data, not an error: it is counted and the first
// one is kept as a witness.
struct PropositionReport {
  std::string proposition;
  double delta = 0.0;       // working delta the check ran with
  long long checked = 0;    // hypothesis-satisfying instances evaluated
  long long violations = 0;
  std::string witness;      // first violation, human-readable; empty if clean
};

struct VerifyOptions {
  int sample_threshold = 40;   // exhaustive instantiation up to this size
  long long samples = 100000;  // tuples per proposition when sampling
  std::uint64_t seed = 0x51ab5eedULL;
};

std::vector<PropositionReport> verify_propositions(const FiniteSpace& space,
                                                   const VerifyOptions& options = {});

// One JSON-lines record per proposition per space:
// {"space_id":...,"proposition":...,"delta":...,"checked":...,"violations":...,"witness":...}
std::string report_jsonl_line(const std::string& space_id, const PropositionReport& report);

}  // namespace curvewalk
