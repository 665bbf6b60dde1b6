#pragma once

#include "irrdec/enumeration.hpp"
#include "irrdec/error.hpp"
#include "irrdec/io.hpp"
#include "irrdec/linalg.hpp"
#include "irrdec/polytope.hpp"
#include "irrdec/quasipolynomial.hpp"
#include "irrdec/rational.hpp"
#include "irrdec/series.hpp"
#include "irrdec/shift.hpp"
#include "irrdec/triangulation.hpp"
