#pragma once

#include "core.hpp"
#include "gen.hpp"
#include "graph.hpp"
#include "kernel.hpp"
#include "saw.hpp"
#include "solvers.hpp"
#include "verify.hpp"
