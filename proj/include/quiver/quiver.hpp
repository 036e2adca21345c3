#pragma once

// Umbrella header.

#include "quiver/bigint.hpp"
#include "quiver/coefficients.hpp"
#include "quiver/factor_sequences.hpp"
#include "quiver/littlewood_richardson.hpp"
#include "quiver/partition.hpp"
#include "quiver/paths.hpp"
#include "quiver/polynomial.hpp"
#include "quiver/random.hpp"
#include "quiver/rank_conditions.hpp"
#include "quiver/schubert.hpp"
#include "quiver/schur_eval.hpp"
#include "quiver/straighten.hpp"
#include "quiver/symbol_polynomial.hpp"
#include "quiver/tableau.hpp"
#include "quiver/verify.hpp"
