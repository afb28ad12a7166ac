#pragma once

// Everything except the CLI front end.

#include "gammacheb/rational.hpp"
#include "gammacheb/poly.hpp"
#include "gammacheb/laurent.hpp"
#include "gammacheb/series.hpp"
#include "gammacheb/reciprocal.hpp"
#include "gammacheb/chebyshev.hpp"
#include "gammacheb/gamma.hpp"
#include "gammacheb/realroot.hpp"
#include "gammacheb/simplicial.hpp"
#include "gammacheb/ce_index.hpp"
#include "gammacheb/sl2.hpp"
#include "gammacheb/json_io.hpp"
#include "gammacheb/random.hpp"
#include "gammacheb/sweep.hpp"
