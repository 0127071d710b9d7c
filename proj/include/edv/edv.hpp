#pragma once

// Umbrella header for the edge-division-vector library.

#include "edv/canonical.hpp"
#include "edv/edge_division.hpp"
#include "edv/enumeration.hpp"
#include "edv/families.hpp"
#include "edv/indices.hpp"
#include "edv/parallel.hpp"
#include "edv/profile.hpp"
#include "edv/report_io.hpp"
#include "edv/tree.hpp"
#include "edv/tree_io.hpp"
#include "edv/verify.hpp"
#include "edv/verify_indices.hpp"
