// Plain-text tables of inner-product counts and symmetry orders.

#pragma once

#include <string>
#include <vector>

#include "kisskit/pointset.hpp"

namespace kisskit {

/// One row per configuration, one column per inner product occurring in any
/// row (ascending), then pair count, antipodal pairs and |Aut| if requested.
std::string spectrum_table(const std::string& title, const std::vector<PointConfiguration>& configs,
                           bool with_aut, Exec exec = Exec::Parallel);

/// The 5d, 6d and 9d tables; byte-stable.
std::string report_tables(Exec exec = Exec::Parallel);

}  // namespace kisskit
