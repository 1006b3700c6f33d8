#pragma once

// Umbrella header for the whole library.

#include "argstrength/argument.hpp"
#include "argstrength/constituents.hpp"
#include "argstrength/ellsberg.hpp"
#include "argstrength/formula.hpp"
#include "argstrength/parser.hpp"
#include "argstrength/rational.hpp"
#include "argstrength/report.hpp"
#include "argstrength/simplex.hpp"
#include "argstrength/solver.hpp"
#include "argstrength/strength.hpp"
