#pragma once

#include <string>
#include <vector>

#include "orthospeed/sweep.hpp"

namespace orthospeed {

// Static line plot of the four |Sp_ij(t)| traces with event markers.
// Output bytes are deterministic for a fixed input.
std::string render_svg(const std::vector<TracePoint>& trace,
                       const std::vector<OrthogonalityEvent>& events);

void emit_svg(const std::vector<TracePoint>& trace,
              const std::vector<OrthogonalityEvent>& events,
              const std::string& path);

}  // namespace orthospeed
