#pragma once

// Umbrella header.

#include "roughdiff/bounds.hpp"
#include "roughdiff/coefficient.hpp"
#include "roughdiff/errors.hpp"
#include "roughdiff/exact1d.hpp"
#include "roughdiff/fd/coefficient2d.hpp"
#include "roughdiff/fd/grid.hpp"
#include "roughdiff/fd/hat_system.hpp"
#include "roughdiff/fd/kernel2d.hpp"
#include "roughdiff/fd/linalg.hpp"
#include "roughdiff/fd/primal1d.hpp"
#include "roughdiff/fd/resolvent.hpp"
#include "roughdiff/fd/strong2d.hpp"
#include "roughdiff/interval.hpp"
#include "roughdiff/limits.hpp"
#include "roughdiff/piecewise.hpp"
#include "roughdiff/polynomial.hpp"
#include "roughdiff/serialize.hpp"
