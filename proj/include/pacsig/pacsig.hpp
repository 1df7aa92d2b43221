#pragma once

#include "pacsig/csv.hpp"
#include "pacsig/error.hpp"
#include "pacsig/fft.hpp"
#include "pacsig/mcval.hpp"
#include "pacsig/mi.hpp"
#include "pacsig/nullmodel.hpp"
#include "pacsig/rng.hpp"
#include "pacsig/scenarios.hpp"
#include "pacsig/sigproc.hpp"
#include "pacsig/specfun.hpp"
#include "pacsig/types.hpp"
#include "pacsig/version.hpp"
