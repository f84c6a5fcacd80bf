#pragma once

#include "stopset/bit_matrix.hpp"
#include "stopset/combinatorics.hpp"
#include "stopset/enumerator.hpp"
#include "stopset/error.hpp"
#include "stopset/exact.hpp"
#include "stopset/hamming.hpp"
#include "stopset/peeling.hpp"
#include "stopset/stopping.hpp"
