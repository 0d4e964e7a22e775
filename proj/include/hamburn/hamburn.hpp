#pragma once

// Exact machinery around burning numbers of Hamming graphs: brute-force
// burning numbers with witnesses, the multicolor floating-variable rounding
// procedure and its certificates, evader construction for the lower bound,
// and the auxiliary exhaustive/randomized searches.

#include "adversary.hpp"
#include "colorcode.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "floatvar.hpp"
#include "hamming.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "selfcheck.hpp"
#include "serialize.hpp"
