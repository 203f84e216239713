#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "mgk/errors.hpp"
#include "mgk/graph.hpp"

namespace mgk {

struct RefineOptions {
    int max_iterations = 200;
    // Convergence target on max |r_e| where r_e = ||p_i - p_j||^2 - 1.
    double residual_target = 1e-12;
    double initial_damping = 1e-3;
    double damping_factor = 10.0;
};

struct RefinementTrace {
    int iterations = 0;
    double initial_max_residual = 0.0;
    double final_max_residual = 0.0;
    bool converged = false;
    // Max distance any vertex moved from its starting position, in units.
    double max_vertex_displacement = 0.0;
};

// Thrown when the damping saturates or the iteration cap is hit before the
// residual target; carries the best configuration reached.
class DidNotConverge : public Error {
  public:
    DidNotConverge(const std::string& what, Graph best, RefinementTrace trace)
        : Error(what), best_graph(std::move(best)), trace(trace) {}
    Graph best_graph;
    RefinementTrace trace;
};

// Squared-distance residuals r_e = ||p_i - p_j||^2 - 1, in edge-list order.
std::vector<double> residuals(const Graph& g);

// Jacobian of `residuals`: |E| rows by 2|V| columns; the row for edge (i,j)
// carries 2(p_i - p_j) in columns (2i, 2i+1) and the negation in (2j, 2j+1).
Eigen::MatrixXd jacobian(const Graph& g);

// Damped (Levenberg-Marquardt) least squares on the edge residuals. Steps
// solve (J^T J + lambda I) delta = -J^T r and are accepted only if they
// reduce the residual sum of squares; lambda shrinks on acceptance and grows
// on rejection. No vertices are pinned: the damping term regularizes the
// rank-deficient normal equations, so symmetric inputs refine symmetrically.
// Throws DidNotConverge (with the best configuration attached) or
// DegenerateConfiguration if an edge collapses below 1e-3.
std::pair<Graph, RefinementTrace> refine(const Graph& g,
                                         const RefineOptions& opts = {});

} // namespace mgk
