#include <cmath>

#include "selberg/errors.hpp"
#include "selberg/group.hpp"

namespace selberg::group {

double GroupDescriptor::b0() const { return std::log(B0); }

void GroupDescriptor::validate() const {
    if (!(area > 0.0)) throw ValidationError("group area must be positive");
    if (cusp_count < 0) throw ValidationError("cusp count must be nonnegative");
    if (!(B0 > 1.0)) throw ValidationError("minimal norm B0 must exceed 1");
    if (!(x0 > 0.0)) throw ValidationError("x0 must be positive");
    if (B0 < x0) throw ValidationError("minimal norm B0 must be at least x0");
    if (!(b1 > 0.0)) throw ValidationError("b1 must be positive");
    if (!(mu0 > 0.0 && mu0 <= 1.0)) throw ValidationError("mu0 must lie in (0, 1]");
    for (const auto& e : elliptic)
        if (e.order < 2 || e.count < 1) throw ValidationError("elliptic classes need order >= 2, count >= 1");
    for (double s : scattering_poles)
        if (!(s > 0.5 && s <= 1.0)) throw ValidationError("scattering poles must lie in (1/2, 1]");
}

GroupDescriptor modular_group() {
    GroupDescriptor g;
    g.name = "PSL(2,Z)";
    g.area = numerics::pi / 3.0;
    g.cusp_count = 1;
    g.elliptic = {{2, 1}, {3, 1}};
    g.tr_phi_half = -1.0;
    g.b1 = 1.0;
    g.B0 = norm_from_trace(3);
    g.x0 = 2.0;
    g.mu0 = 1.0;
    g.scattering_poles = {1.0};
    g.scattering = std::make_shared<ModularScattering>();
    g.modular = true;
    return g;
}

}  // namespace selberg::group
