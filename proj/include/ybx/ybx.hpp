#pragma once

#include "ybx/analysis.hpp"
#include "ybx/cabling.hpp"
#include "ybx/corpus.hpp"
#include "ybx/decomposition.hpp"
#include "ybx/errors.hpp"
#include "ybx/io.hpp"
#include "ybx/monoid.hpp"
#include "ybx/permutation.hpp"
#include "ybx/quotients.hpp"
#include "ybx/rack.hpp"
#include "ybx/solution.hpp"
