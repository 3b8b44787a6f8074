#pragma once

// Umbrella header. float_oracle.hpp is excluded so that exact-arithmetic
// consumers do not pull in Eigen; include it directly where needed.

#include "clebsch/binomial.hpp"
#include "clebsch/cg_table.hpp"
#include "clebsch/conditional.hpp"
#include "clebsch/errors.hpp"
#include "clebsch/ladder.hpp"
#include "clebsch/rational.hpp"
#include "clebsch/sampling.hpp"
#include "clebsch/signed_sqrt_rational.hpp"
#include "clebsch/spectrum.hpp"
#include "clebsch/spin.hpp"
#include "clebsch/stretched.hpp"
#include "clebsch/table_checks.hpp"
