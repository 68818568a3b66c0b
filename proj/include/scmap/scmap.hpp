#pragma once

#include "complex_kernel.hpp"
#include "errors.hpp"
#include "gallery.hpp"
#include "grid_mapper.hpp"
#include "quadrature.hpp"
#include "sc_core.hpp"
#include "special_functions.hpp"
