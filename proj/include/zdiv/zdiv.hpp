#pragma once

#include "zdiv/errors.hpp"
#include "zdiv/element_set.hpp"
#include "zdiv/semiring.hpp"
#include "zdiv/builtins.hpp"
#include "zdiv/ideal.hpp"
#include "zdiv/semimodule.hpp"
#include "zdiv/polynomial.hpp"
#include "zdiv/mccoy.hpp"
#include "zdiv/semialgebra.hpp"
#include "zdiv/json_io.hpp"
#include "zdiv/harness.hpp"
