// Command dispatch and report generation for the CLI.  Reports are
// deterministic text: byte-identical across runs and execution policies.

#pragma once

#include <string>

#include "qdeform/job.hpp"

namespace qdeform {

struct RunOptions {
  std::string command;    // build | reduce | dims | primitives | deform |
                          // double | verify
  std::string argument;   // expression (reduce) or verify target
  int max_degree = -1;    // per-command depth; -1 picks the default
  int degree = -1;        // primitives degree
  std::string emit;       // rules | cocycle | dims
  std::string target;     // h | hlambda | cleft (overrides the preset suffix)
  bool quotient = false;
  bool verify = false;
  ExecPolicy policy = ExecPolicy::serial;
};

struct RunResult {
  int exit_code = 0;
  std::string report;
};

RunResult run(const JobSpec& job, const RunOptions& opts);

}  // namespace qdeform
