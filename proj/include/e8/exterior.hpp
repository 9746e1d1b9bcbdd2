#pragma once

#include "e8/exterior/cross.hpp"
#include "e8/exterior/matrix9.hpp"
#include "e8/exterior/subsets.hpp"
#include "e8/exterior/wedge.hpp"
