#pragma once

#include "gmsv/brute_force.hpp"
#include "gmsv/bundle.hpp"
#include "gmsv/cross_validation.hpp"
#include "gmsv/dfs_code.hpp"
#include "gmsv/error.hpp"
#include "gmsv/features.hpp"
#include "gmsv/graph.hpp"
#include "gmsv/gside.hpp"
#include "gmsv/io.hpp"
#include "gmsv/linear_svm.hpp"
#include "gmsv/matcher.hpp"
#include "gmsv/matrix.hpp"
#include "gmsv/metrics.hpp"
#include "gmsv/miner.hpp"
#include "gmsv/pattern.hpp"
#include "gmsv/report.hpp"
#include "gmsv/rng.hpp"
#include "gmsv/side_views.hpp"
#include "gmsv/stats.hpp"
#include "gmsv/synth.hpp"
#include "gmsv/topk.hpp"
