// Umbrella header.

#pragma once

#include "tcs/cech.hpp"
#include "tcs/chains.hpp"
#include "tcs/cuts.hpp"
#include "tcs/edge_function.hpp"
#include "tcs/ends.hpp"
#include "tcs/family.hpp"
#include "tcs/graph.hpp"
#include "tcs/membership.hpp"
#include "tcs/snf.hpp"
#include "tcs/standard_chains.hpp"
#include "tcs/symbolic_words.hpp"
#include "tcs/tree.hpp"
#include "tcs/walks.hpp"
#include "tcs/words.hpp"
