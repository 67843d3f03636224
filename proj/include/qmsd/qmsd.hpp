#pragma once

#include "qmsd/basis.hpp"
#include "qmsd/closed_forms.hpp"
#include "qmsd/errors.hpp"
#include "qmsd/exact_msd.hpp"
#include "qmsd/ideal.hpp"
#include "qmsd/montecarlo.hpp"
#include "qmsd/scattering.hpp"
#include "qmsd/system.hpp"
#include "qmsd/time_grid.hpp"
#include "qmsd/units.hpp"
