#pragma once

#include "threesum/convolution.hpp"
#include "threesum/engine_known_c.hpp"
#include "threesum/engine_unknown_c_det.hpp"
#include "threesum/engine_unknown_c_rand.hpp"
#include "threesum/errors.hpp"
#include "threesum/integer_set.hpp"
#include "threesum/numtheory.hpp"
#include "threesum/oracle.hpp"
#include "threesum/types.hpp"
#include "threesum/witness_table.hpp"
