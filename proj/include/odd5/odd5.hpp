#pragma once

#include "odd5/coloring.hpp"
#include "odd5/enumerate.hpp"
#include "odd5/errors.hpp"
#include "odd5/fuzz.hpp"
#include "odd5/generators.hpp"
#include "odd5/graph.hpp"
#include "odd5/io.hpp"
#include "odd5/o1p.hpp"
#include "odd5/oracle.hpp"
#include "odd5/reducers.hpp"
#include "odd5/solver.hpp"
#include "odd5/structure.hpp"
#include "odd5/two_boundary.hpp"
