#pragma once

// Umbrella header for the potency library: simplicial complexes, integral
// homology, quotients, knot detection, and the exact geometry of the prism
// model of the third symmetric potency of the circle.

#include "potency/alexander.hpp"
#include "potency/complement.hpp"
#include "potency/complex.hpp"
#include "potency/complex_io.hpp"
#include "potency/errors.hpp"
#include "potency/geometry.hpp"
#include "potency/homology.hpp"
#include "potency/integer.hpp"
#include "potency/laurent.hpp"
#include "potency/matrix.hpp"
#include "potency/presentation.hpp"
#include "potency/quotient.hpp"
#include "potency/report.hpp"
#include "potency/simplex.hpp"
#include "potency/verify.hpp"
#include "potency/words.hpp"
