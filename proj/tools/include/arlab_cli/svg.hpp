#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "arlab/harness.hpp"

namespace arlab::cli {

/// Line chart of m_hat against T with one polyline per mode.
void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows, const std::string& title);

}  // namespace arlab::cli
