#pragma once

#include <optional>
#include <string>

#include "orthospeed/model.hpp"

namespace orthospeed {

// Physical circuit parameters, SI units throughout.
struct DeviceParams {
    double C_g = 0.0;    // gate capacitance (F)
    double C_J = 0.0;    // junction capacitance (F)
    double C_F = 0.0;    // field-mode capacitance (F)
    double E_J = 0.0;    // Josephson energy (J)
    double omega = 0.0;  // field angular frequency (rad/s)
    double e = 1.602176634e-19;
    double hbar = 1.054571817e-34;

    void validate() const;
};

// E_c = e^2 / (2 (C_g + C_J))
double charging_energy(const DeviceParams& dev);

// Canonical mapping: g = sqrt(omega / (2 C_F hbar)) * e C_J / (C_g + C_J).
double coupling_g(const DeviceParams& dev);

// Alternative printed form g = sqrt(omega / (C_F hbar)) * E_c / 2. The two
// forms are algebraically inconsistent by a constant factor; this one exists
// only so the discrepancy can be reported, never used in the pipeline.
double coupling_g_alt(const DeviceParams& dev);

// Delta = E_J / hbar - omega (rad/s).
double detuning_delta(const DeviceParams& dev);

// The model assumes the charge-dominated regime E_c >> E_J ~ hbar*omega;
// returns a message when E_c < 10 * max(E_J, hbar*omega).
std::optional<std::string> regime_warning(const DeviceParams& dev);

}  // namespace orthospeed
