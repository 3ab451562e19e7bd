#include "orthospeed/device.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace orthospeed {

void DeviceParams::validate() const {
    const struct {
        const char* name;
        double v;
    } fields[] = {{"C_g", C_g},     {"C_J", C_J}, {"C_F", C_F}, {"E_J", E_J},
                  {"omega", omega}, {"e", e},     {"hbar", hbar}};
    for (const auto& f : fields)
        if (!(f.v > 0.0) || !std::isfinite(f.v))
            throw domain_error(std::string("device parameter ") + f.name +
                               " must be finite and > 0");
}

double charging_energy(const DeviceParams& dev) {
    dev.validate();
    return dev.e * dev.e / (2.0 * (dev.C_g + dev.C_J));
}

double coupling_g(const DeviceParams& dev) {
    dev.validate();
    return std::sqrt(dev.omega / (2.0 * dev.C_F * dev.hbar)) * dev.e * dev.C_J /
           (dev.C_g + dev.C_J);
}

double coupling_g_alt(const DeviceParams& dev) {
    return std::sqrt(dev.omega / (dev.C_F * dev.hbar)) *
           charging_energy(dev) / 2.0;
}

double detuning_delta(const DeviceParams& dev) {
    dev.validate();
    return dev.E_J / dev.hbar - dev.omega;
}

std::optional<std::string> regime_warning(const DeviceParams& dev) {
    const double ec = charging_energy(dev);
    const double scale = std::max(dev.E_J, dev.hbar * dev.omega);
    if (ec >= 10.0 * scale) return std::nullopt;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "charge regime violated: E_c = %.6g J is not >= 10 * "
                  "max(E_J, hbar*omega) = %.6g J",
                  ec, 10.0 * scale);
    return std::string(buf);
}

}  // namespace orthospeed
