#ifndef HAMCYCLE_FIXTURES_HPP
#define HAMCYCLE_FIXTURES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hamcycle/graph.hpp"

namespace hamcycle {

/// Named constructions: C4, C5, K4, K5, THETA3, THETA4, BOWTIE, PETERSEN,
/// HERSCHEL, WHEEL5 and CHAIN(k,len). Names are case-insensitive.
///
/// THETA3/THETA4 have hubs X=1, X'=2 joined by three/four 2-edge paths
/// through 3, 4, 5 (, 6). WHEEL5 has hub 0 and rim 1..5. BOWTIE is two
/// triangles 1-2-3 and 1-4-5. Cycles and complete graphs use labels 1..n;
/// PETERSEN and HERSCHEL use 0..n-1. Throws UnknownFixture.
[[nodiscard]] Graph named_fixture(std::string_view name);

/// Names accepted by named_fixture, CHAIN listed with its default arguments.
[[nodiscard]] std::vector<std::string> fixture_names();

} // namespace hamcycle

#endif // HAMCYCLE_FIXTURES_HPP
