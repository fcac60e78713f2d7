#pragma once

#include "flowerkit/errors.hpp"
#include "flowerkit/numkit.hpp"
#include "flowerkit/bodies.hpp"
#include "flowerkit/dualities.hpp"
#include "flowerkit/arithmetic.hpp"
#include "flowerkit/functionals.hpp"
#include "flowerkit/fleet.hpp"
#include "flowerkit/io.hpp"
#include "flowerkit/expr.hpp"
#include "flowerkit/svg.hpp"
#include "flowerkit/suites.hpp"
