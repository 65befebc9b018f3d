#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "repur/grid.hpp"

namespace repur {

/// Two-column files (x, value) load as densities, three-column files
/// (x, re, im) as amplitudes. The first line is a header and is skipped.
using GridData = std::variant<SampledDensity, SampledAmplitude>;

GridData read_grid_csv(std::istream& in);
GridData read_grid_csv_file(const std::string& path);

void write_density_csv(std::ostream& out, const SampledDensity& d);
void write_amplitude_csv(std::ostream& out, const SampledAmplitude& a);

}  // namespace repur
