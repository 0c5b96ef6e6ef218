#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cornu/riccati.hpp"

namespace plotcli {

// Bad flags, malformed numbers, invalid grids.  Exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unwritable paths and other filesystem trouble.  Exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --help was requested; carries the text to print.  Exit code 0.
class HelpRequested {
 public:
  explicit HelpRequested(std::string text) : text_(std::move(text)) {}
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

enum class JobKind {
  argand_grid,
  distortion,
  comparison,
  single_spiral,
  residual_report
};

enum class OutputFormat { svg, csv, both };

struct PlotJob {
  JobKind kind = JobKind::single_spiral;
  std::vector<cornu::DeformationParameter> parameters;
  std::vector<double> phases;
  double z_min = -5.0;
  double z_max = 5.0;
  int samples_per_curve = 1001;
  std::string output_path;
  OutputFormat format = OutputFormat::both;
  double clip = 200.0;
};

}  // namespace plotcli
