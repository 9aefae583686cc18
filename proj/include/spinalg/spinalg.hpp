// spinalg: umbrella header.
#pragma once

#include "dynamics.hpp"
#include "half_int.hpp"
#include "matrix.hpp"
#include "spin_basis.hpp"
#include "sqrt_rational.hpp"
#include "structure_constants.hpp"
#include "wigner.hpp"
