#pragma once

#include <string>
#include <vector>

#include "selberg/asymptotics.hpp"

namespace selberg::asymptotics::detail {

// r^2 for every discrete point: cusp forms plus exceptional lambda (r^2 = lambda - 1/4)
std::vector<double> discrete_r2(const SpectralDataset& data);

std::string power_label(double k);

// fills ladder_fit and the log52 fields of out in 50-digit arithmetic
void extended_ladder_fit(const SpectralDataset& data, const GroupDescriptor& g, const std::vector<double>& ts,
                         DifferenceTable& out);

}  // namespace selberg::asymptotics::detail
