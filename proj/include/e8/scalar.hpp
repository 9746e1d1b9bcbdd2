#pragma once

#include "e8/scalar/cyclotomic24.hpp"
#include "e8/scalar/errors.hpp"
#include "e8/scalar/gaussian.hpp"
#include "e8/scalar/matrix.hpp"
#include "e8/scalar/rational.hpp"
#include "e8/scalar/sparse.hpp"
#include "e8/scalar/traits.hpp"
