#pragma once

#include "hypermat/rational.hpp"
#include "hypermat/error.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/io.hpp"
#include "hypermat/mincut.hpp"
#include "hypermat/gadgets.hpp"
#include "hypermat/partition_oracle.hpp"
#include "hypermat/matroid.hpp"
#include "hypermat/packing.hpp"
#include "hypermat/reinforcement.hpp"
#include "hypermat/brute.hpp"
