#pragma once

#include "dicolor/coloring.hpp"
#include "dicolor/decomposition.hpp"
#include "dicolor/degeneracy.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/error.hpp"
#include "dicolor/generators.hpp"
#include "dicolor/half_int.hpp"
#include "dicolor/io.hpp"
#include "dicolor/oracle.hpp"
#include "dicolor/patterns.hpp"
