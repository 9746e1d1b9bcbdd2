#pragma once

#include "e8/lie/algebra.hpp"
#include "e8/lie/linear_map.hpp"
#include "e8/lie/table.hpp"
