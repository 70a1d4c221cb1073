#pragma once

#include <iosfwd>
#include <string>

#include "maxent/moment_model.hpp"

namespace maxent {
namespace io {

/// Moments JSON: {"moments": [1.0, ...]} ordered from k = 0.
MomentSequence read_moments_json(std::istream& in);
MomentSequence read_moments_json_file(const std::string& path);
void write_moments_json(std::ostream& out, const MomentSequence& mu);

/// Distribution CSV: header "x,p", contiguous ascending integer states,
/// probabilities at 17 significant digits.
/// sum_tolerance controls how far from 1 the column may drift on read.
FiniteDistribution read_distribution_csv(std::istream& in, double sum_tolerance = 1e-9);
FiniteDistribution read_distribution_csv_file(const std::string& path,
                                              double sum_tolerance = 1e-9);
void write_distribution_csv(std::ostream& out, const FiniteDistribution& dist);
void write_distribution_json(std::ostream& out, const FiniteDistribution& dist);

}  // namespace io
}  // namespace maxent
