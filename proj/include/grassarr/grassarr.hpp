#pragma once

#include "grassarr/arrangement.hpp"
#include "grassarr/error.hpp"
#include "grassarr/exactlin.hpp"
#include "grassarr/io.hpp"
#include "grassarr/matroid.hpp"
#include "grassarr/pluecker.hpp"
#include "grassarr/rational.hpp"
#include "grassarr/report.hpp"
#include "grassarr/sampling.hpp"
#include "grassarr/strata.hpp"
#include "grassarr/verify.hpp"
