#pragma once

#include "arith.hpp"
#include "characters.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "historical.hpp"
#include "l_series.hpp"
#include "primes.hpp"
#include "unit_group.hpp"
