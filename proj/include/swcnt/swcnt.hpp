#pragma once

#include "swcnt/bloch.hpp"
#include "swcnt/geometry.hpp"
#include "swcnt/reciprocal.hpp"
#include "swcnt/surface_function.hpp"
#include "swcnt/tightbinding.hpp"
#include "swcnt/transforms.hpp"
