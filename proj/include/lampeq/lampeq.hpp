#pragma once

#include "lampeq/divauto.hpp"
#include "lampeq/gf2poly.hpp"
#include "lampeq/lamplighter.hpp"
#include "lampeq/parametric.hpp"
#include "lampeq/solver.hpp"
#include "lampeq/stats.hpp"
#include "lampeq/tracer.hpp"
#include "lampeq/word.hpp"
