#pragma once

// Umbrella header: pseudoinverses of undirected-graph adjacency matrices
// by following the Tikhonov regularization path of the resolvent
// (1/λ)I + A², with spectral and exact-rational oracles to certify the
// results.

#include "gpinv/cholesky.hpp"
#include "gpinv/edge_list.hpp"
#include "gpinv/generators.hpp"
#include "gpinv/graph.hpp"
#include "gpinv/matrix.hpp"
#include "gpinv/matrix_io.hpp"
#include "gpinv/pinv.hpp"
#include "gpinv/rational.hpp"
#include "gpinv/resolvent.hpp"
#include "gpinv/spectral.hpp"
#include "gpinv/verify.hpp"
