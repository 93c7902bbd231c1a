#pragma once

// Umbrella header for the core library. JSON serialization lives in
// hermspec/json_io.hpp and is not pulled in here, so the core stays free of
// third-party includes beyond Boost.Multiprecision and Eigen.

#include "hermspec/gaussian.hpp"
#include "hermspec/polynomial.hpp"
#include "hermspec/mixed_graph.hpp"
#include "hermspec/cycles.hpp"
#include "hermspec/elementary.hpp"
#include "hermspec/hermitian.hpp"
#include "hermspec/charpoly.hpp"
#include "hermspec/eigenvalues.hpp"
#include "hermspec/sturm.hpp"
#include "hermspec/isomorphism.hpp"
#include "hermspec/families.hpp"
#include "hermspec/classify.hpp"
#include "hermspec/enumerate.hpp"
#include "hermspec/verify_exhaustive.hpp"
#include "hermspec/verify.hpp"
