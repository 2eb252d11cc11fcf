#pragma once

// Umbrella header for the reduced power algebra core.

#include "rpa/complex.hpp"
#include "rpa/error.hpp"
#include "rpa/filter.hpp"
#include "rpa/format.hpp"
#include "rpa/germ.hpp"
#include "rpa/grid_operator.hpp"
#include "rpa/index_set.hpp"
#include "rpa/puiseux.hpp"
#include "rpa/random.hpp"
#include "rpa/rational.hpp"
#include "rpa/scalar.hpp"
#include "rpa/wave.hpp"
