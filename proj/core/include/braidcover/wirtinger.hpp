#pragma once
#include "diagram.hpp"
#include "laurent.hpp"

namespace braidcover {

// Alexander polynomial of a knot diagram via the Wirtinger presentation,
// normalized symmetric with Delta(1) = 1.  Requires a connected
// single-component diagram.
LaurentPoly wirtingerAlexander(const LinkDiagram& d);

} // namespace braidcover
