#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "plotcli/plotjob.hpp"

namespace plotcli {

// Maps argv (without the program name) onto a validated PlotJob.
// Throws UsageError on bad input and HelpRequested for --help.
PlotJob parse_cli(const std::vector<std::string>& args);

// Executors.  Each writes the files selected by job.format and returns
// the written paths (run_comparison returns the primary one).
std::vector<std::string> run_argand_grid(const PlotJob& job);
std::vector<std::string> run_distortion(const PlotJob& job);
std::string run_comparison(const PlotJob& job);

// Runs the residual suite, prints one line per equation, returns 0 when
// every report passes and 3 otherwise.
int run_verify(std::ostream& os);

// Dispatch on job.kind; prints written paths to os; returns exit code.
int run(const PlotJob& job, std::ostream& os);

}  // namespace plotcli
