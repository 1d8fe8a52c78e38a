#pragma once

// Umbrella header.

#include "htrans/copies.hpp"
#include "htrans/density.hpp"
#include "htrans/graph.hpp"
#include "htrans/io.hpp"
#include "htrans/labeling.hpp"
#include "htrans/lp.hpp"
#include "htrans/oracles.hpp"
#include "htrans/random.hpp"
#include "htrans/reduce_packing.hpp"
#include "htrans/reduce_transversal.hpp"
#include "htrans/serialize.hpp"
#include "htrans/star_approx.hpp"
#include "htrans/structure.hpp"
