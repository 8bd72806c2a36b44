#pragma once

// Exact arithmetic kernel: rationals, polynomials, and matrices over both.
#include "netctrl/poly.hpp"
#include "netctrl/poly_matrix.hpp"
#include "netctrl/rational.hpp"
#include "netctrl/rmatrix.hpp"
