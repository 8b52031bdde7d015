#pragma once

#include "panev/affine.hpp"
#include "panev/checkers.hpp"
#include "panev/diffpoly.hpp"
#include "panev/error.hpp"
#include "panev/generator.hpp"
#include "panev/instances.hpp"
#include "panev/io.hpp"
#include "panev/nevanlinna.hpp"
#include "panev/newton.hpp"
#include "panev/operators.hpp"
#include "panev/parse.hpp"
#include "panev/poly.hpp"
#include "panev/print.hpp"
#include "panev/ratfunc.hpp"
#include "panev/rational.hpp"
#include "panev/rng.hpp"
#include "panev/runner.hpp"
#include "panev/scalar.hpp"
#include "panev/series.hpp"
#include "panev/verdict.hpp"
