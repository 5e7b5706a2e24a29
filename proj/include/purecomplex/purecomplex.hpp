#pragma once

// Umbrella header: exact representation, realizability, reconstruction, and
// counting for pure simplicial and clique complexes.

#include "purecomplex/bignum.hpp"
#include "purecomplex/bitmask.hpp"
#include "purecomplex/errors.hpp"
#include "purecomplex/simplicial_complex.hpp"
#include "purecomplex/incidence.hpp"
#include "purecomplex/vertex_data.hpp"
#include "purecomplex/adjacency.hpp"
#include "purecomplex/clique.hpp"
#include "purecomplex/intersection_data.hpp"
#include "purecomplex/canonical.hpp"
#include "purecomplex/counterexample.hpp"
#include "purecomplex/counting.hpp"
#include "purecomplex/enumeration.hpp"
#include "purecomplex/json_io.hpp"
