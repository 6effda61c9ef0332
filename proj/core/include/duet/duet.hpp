#pragma once

// Umbrella header for the duet library: steady-state entanglement of two
// nonidentical two-level atoms coupled through their common radiation field,
// with one atom driven by a laser.

#include "duet/collective_coupling.hpp"
#include "duet/dressed.hpp"
#include "duet/entanglement.hpp"
#include "duet/liouvillian.hpp"
#include "duet/operator_set.hpp"
#include "duet/solver.hpp"
#include "duet/sweep.hpp"
#include "duet/system_params.hpp"
#include "duet/tolerances.hpp"
#include "duet/types.hpp"
#include "duet/validate.hpp"
#include "duet/version.hpp"
