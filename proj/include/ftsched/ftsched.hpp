#ifndef FTSCHED_FTSCHED_HPP
#define FTSCHED_FTSCHED_HPP

#include "adversary_solver.hpp"
#include "errors.hpp"
#include "extensions.hpp"
#include "game.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "matrix_game.hpp"
#include "oracle.hpp"
#include "survival.hpp"

#endif
