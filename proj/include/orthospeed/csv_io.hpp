#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orthospeed/sweep.hpp"

namespace orthospeed {

// 17 significant digits: enough for exact double round-trips, so identical
// runs are byte-comparable.
std::string fmt17(double v);

std::string render_trace_csv(const nlohmann::json& echo,
                             const std::vector<TracePoint>& trace,
                             bool with_dev);
std::string render_events_csv(const nlohmann::json& echo,
                              const std::vector<OrthogonalityEvent>& events);
std::string render_sweep_csv(const nlohmann::json& echo, const std::string& axis,
                             const std::vector<SweepRow>& rows);

// LF endings regardless of platform; parent directories must exist.
void write_file(const std::string& path, const std::string& content);

}  // namespace orthospeed
