#pragma once

#include "umbra/basis.hpp"
#include "umbra/classical.hpp"
#include "umbra/combinatorics.hpp"
#include "umbra/errors.hpp"
#include "umbra/expr.hpp"
#include "umbra/identities.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/power_series.hpp"
#include "umbra/random_source.hpp"
#include "umbra/rational.hpp"
#include "umbra/render.hpp"
#include "umbra/sheffer.hpp"
