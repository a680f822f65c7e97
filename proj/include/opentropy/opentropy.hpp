#pragma once

// Umbrella header for the opentropy library: kernel energies S, variances V
// and the order-2 Renyi/Tsallis entropies of positive linear operators,
// together with the cross-validation and inequality-scanning machinery.

#include "opentropy/basis.hpp"
#include "opentropy/catalog.hpp"
#include "opentropy/domain.hpp"
#include "opentropy/io.hpp"
#include "opentropy/legendre.hpp"
#include "opentropy/multivariate.hpp"
#include "opentropy/ode.hpp"
#include "opentropy/quadrature.hpp"
#include "opentropy/rational.hpp"
#include "opentropy/verifier.hpp"
