#pragma once

// Umbrella header: the full library surface.

#include "posetval/errors.hpp"
#include "posetval/rational.hpp"
#include "posetval/polynomial.hpp"
#include "posetval/linden.hpp"
#include "posetval/geom.hpp"
#include "posetval/bernoulli.hpp"
#include "posetval/series.hpp"
#include "posetval/poset.hpp"
#include "posetval/poset_cycles.hpp"
#include "posetval/notch.hpp"
#include "posetval/skew.hpp"
#include "posetval/planar.hpp"
#include "posetval/simplex.hpp"
#include "posetval/cone.hpp"
#include "posetval/valuations.hpp"
#include "posetval/io.hpp"
