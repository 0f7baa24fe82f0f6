#pragma once

#include "bimarket/assignment.hpp"
#include "bimarket/bargaining.hpp"
#include "bimarket/core.hpp"
#include "bimarket/errors.hpp"
#include "bimarket/permutation_game.hpp"
#include "bimarket/rational.hpp"
