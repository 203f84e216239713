#pragma once

#include <vector>

#include <Eigen/Core>

#include "mgk/graph.hpp"

namespace mgk {

struct RigidityReport {
    int vertex_count = 0;
    int edge_count = 0;
    int rank = 0;
    // Planar rigid-body motions: two translations and one rotation. Fixed at
    // 3 once the degeneracy guard (>= 3 vertices, not all collinear) passes.
    int trivial_dim = 3;
    int internal_dof = 0; // 2|V| - trivial_dim - rank
    bool rigid = false;   // internal_dof == 0
    // Orthonormal basis of the nontrivial infinitesimal motions: null space
    // of the rigidity matrix minus the trivial motions. One 2|V|-vector per
    // internal degree of freedom.
    std::vector<Eigen::VectorXd> flex_basis;
    double rank_tolerance_used = 0.0;
};

// First-order length-constraint matrix, |E| rows by 2|V| columns. The row
// for edge (i,j) carries (p_i - p_j) in columns (2i, 2i+1) and the negation
// in (2j, 2j+1); its null space holds all infinitesimal motions.
Eigen::MatrixXd rigidity_matrix(const Graph& g);

// Singular values above tol_factor * (largest singular value) * max(rows,
// cols) count toward the rank, making the result scale-invariant.
int numeric_rank(const Eigen::MatrixXd& m, double tol_factor = 1e-8);

// Rank/DOF analysis of a realized graph. Requires at least 3 vertices, not
// all collinear; throws DegenerateFramework otherwise (the trivial-motion
// dimension would differ).
RigidityReport analyze_rigidity(const Graph& g, double tol_factor = 1e-8);

} // namespace mgk
