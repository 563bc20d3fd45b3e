#pragma once

// Umbrella header for the sunit-forge library.

#include "sunit/bigint.hpp"
#include "sunit/combinatorics.hpp"
#include "sunit/config.hpp"
#include "sunit/factor.hpp"
#include "sunit/oracle.hpp"
#include "sunit/params.hpp"
#include "sunit/primes.hpp"
#include "sunit/report.hpp"
#include "sunit/rng.hpp"
#include "sunit/thm1.hpp"
#include "sunit/thm2.hpp"
#include "sunit/types.hpp"
