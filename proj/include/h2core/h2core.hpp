#pragma once

// Umbrella header: shell-index estimation from local information (h2-index),
// SIR spreading validation, ranking evaluation, hill-climbing top-node
// search, and percentile-rank curve fitting.

#include "h2core/coreness.hpp"
#include "h2core/crawl.hpp"
#include "h2core/graph.hpp"
#include "h2core/graph_io.hpp"
#include "h2core/parallel.hpp"
#include "h2core/ranking.hpp"
#include "h2core/rankfit.hpp"
#include "h2core/rng.hpp"
#include "h2core/sir.hpp"
#include "h2core/version.hpp"
