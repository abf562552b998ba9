#pragma once

// Umbrella header.

#include "ngon/error.hpp"
#include "ngon/rat.hpp"
#include "ngon/zeta.hpp"
#include "ngon/matrix.hpp"
#include "ngon/vandermonde.hpp"
#include "ngon/complex.hpp"
#include "ngon/pmatrix.hpp"
#include "ngon/fvectors.hpp"
#include "ngon/verifier.hpp"
#include "ngon/serialize.hpp"
