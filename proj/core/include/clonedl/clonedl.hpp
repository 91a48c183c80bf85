#pragma once

#include "clonedl/bool_fun.hpp"
#include "clonedl/clone.hpp"
#include "clonedl/engine.hpp"
#include "clonedl/error.hpp"
#include "clonedl/formula.hpp"
#include "clonedl/implication.hpp"
#include "clonedl/random.hpp"
#include "clonedl/reductions.hpp"
#include "clonedl/theory.hpp"
#include "clonedl/truth_table.hpp"
