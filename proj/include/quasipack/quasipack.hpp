#pragma once

// Quasiperiodic packings of multi-shell group clusters by strip projection
// in a high-dimensional superspace. Umbrella header.

#include "quasipack/config.hpp"
#include "quasipack/embedding.hpp"
#include "quasipack/enumerate.hpp"
#include "quasipack/errors.hpp"
#include "quasipack/export_io.hpp"
#include "quasipack/group_orbits.hpp"
#include "quasipack/linalg.hpp"
#include "quasipack/oracle.hpp"
#include "quasipack/render.hpp"
#include "quasipack/strip.hpp"
