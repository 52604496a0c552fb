#pragma once

#include "powcol/bounds.hpp"
#include "powcol/enumerate.hpp"
#include "powcol/error.hpp"
#include "powcol/forest.hpp"
#include "powcol/game.hpp"
#include "powcol/generate.hpp"
#include "powcol/io.hpp"
#include "powcol/monitor.hpp"
#include "powcol/power.hpp"
#include "powcol/random.hpp"
#include "powcol/solver.hpp"
#include "powcol/strategies.hpp"
#include "powcol/trace.hpp"
#include "powcol/verifier.hpp"
