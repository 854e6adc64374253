#pragma once

#include "fatequator/bounds.hpp"
#include "fatequator/csv.hpp"
#include "fatequator/manifolds.hpp"
#include "fatequator/moments.hpp"
#include "fatequator/montecarlo.hpp"
#include "fatequator/rng.hpp"
#include "fatequator/special_functions.hpp"
#include "fatequator/sphere_geometry.hpp"
#include "fatequator/svg.hpp"
#include "fatequator/verify.hpp"
