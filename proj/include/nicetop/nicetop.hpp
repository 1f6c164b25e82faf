#pragma once
// Umbrella header.

#include "nicetop/alexandroff.hpp"
#include "nicetop/base.hpp"
#include "nicetop/grid_oracle.hpp"
#include "nicetop/ladders.hpp"
#include "nicetop/order_core.hpp"
#include "nicetop/pattern_rings.hpp"
#include "nicetop/runner.hpp"
#include "nicetop/serialize.hpp"
#include "nicetop/spectra.hpp"
#include "nicetop/valuation.hpp"
