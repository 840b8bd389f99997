#pragma once

#include <qhit/chebyshev.hpp>
#include <qhit/complete_graph.hpp>
#include <qhit/dense.hpp>
#include <qhit/error.hpp>
#include <qhit/io.hpp>
#include <qhit/markov_chain.hpp>
#include <qhit/spectrum.hpp>
#include <qhit/walk_operators.hpp>
#include <qhit/walk_sim.hpp>
