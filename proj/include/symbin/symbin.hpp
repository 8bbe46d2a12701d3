#pragma once

// Umbrella header.

#include "symbin/approx.hpp"
#include "symbin/bigfloat.hpp"
#include "symbin/dyadic.hpp"
#include "symbin/envelopes.hpp"
#include "symbin/exact.hpp"
#include "symbin/sweep.hpp"
#include "symbin/types.hpp"
