#pragma once

#include "degseq/bipartite.hpp"
#include "degseq/error.hpp"
#include "degseq/extremal.hpp"
#include "degseq/graph.hpp"
#include "degseq/oracle.hpp"
#include "degseq/realize.hpp"
#include "degseq/sequence.hpp"
#include "degseq/solvers.hpp"
#include "degseq/sweep.hpp"
#include "degseq/witness.hpp"
