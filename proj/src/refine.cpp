#include "mgk/refine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace mgk {

namespace {

constexpr double kMinDamping = 1e-12;
constexpr double kMaxDamping = 1e12;
constexpr double kCollapseLength = 1e-3;

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double sum_squares(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

std::vector<double> residuals_at(const Eigen::VectorXd& p,
                                 const std::vector<Edge>& edges) {
    std::vector<double> r(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [i, j] = edges[e];
        double dx = p[2 * i] - p[2 * j];
        double dy = p[2 * i + 1] - p[2 * j + 1];
        r[e] = dx * dx + dy * dy - 1.0;
    }
    return r;
}

void check_no_collapse(const Eigen::VectorXd& p,
                       const std::vector<Edge>& edges) {
    for (const auto& [i, j] : edges) {
        double dx = p[2 * i] - p[2 * j];
        double dy = p[2 * i + 1] - p[2 * j + 1];
        if (std::sqrt(dx * dx + dy * dy) < kCollapseLength) {
            std::ostringstream msg;
            msg << "edge (" << i << ", " << j << ") collapsed below length "
                << kCollapseLength << " during refinement";
            throw DegenerateConfiguration(msg.str());
        }
    }
}

Eigen::MatrixXd jacobian_at(const Eigen::VectorXd& p,
                            const std::vector<Edge>& edges) {
    Eigen::MatrixXd J =
        Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(edges.size()),
                              p.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [i, j] = edges[e];
        double dx = 2.0 * (p[2 * i] - p[2 * j]);
        double dy = 2.0 * (p[2 * i + 1] - p[2 * j + 1]);
        auto row = static_cast<Eigen::Index>(e);
        J(row, 2 * i) = dx;
        J(row, 2 * i + 1) = dy;
        J(row, 2 * j) = -dx;
        J(row, 2 * j + 1) = -dy;
    }
    return J;
}

Eigen::VectorXd flatten(const Graph& g) {
    Eigen::VectorXd p(2 * g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        p[2 * v] = g.vertices[v].x;
        p[2 * v + 1] = g.vertices[v].y;
    }
    return p;
}

} // namespace

std::vector<double> residuals(const Graph& g) {
    return residuals_at(flatten(g), g.edges);
}

Eigen::MatrixXd jacobian(const Graph& g) {
    return jacobian_at(flatten(g), g.edges);
}

std::pair<Graph, RefinementTrace> refine(const Graph& g,
                                         const RefineOptions& opts) {
    const auto& edges = g.edges;
    Eigen::VectorXd p = flatten(g);
    const Eigen::VectorXd p0 = p;

    std::vector<double> r = residuals_at(p, edges);
    double ssq = sum_squares(r);
    double lambda = opts.initial_damping;

    RefinementTrace trace;
    trace.initial_max_residual = max_abs(r);

    bool stuck = false;
    while (max_abs(r) > opts.residual_target &&
           trace.iterations < opts.max_iterations && !stuck) {
        ++trace.iterations;
        Eigen::MatrixXd J = jacobian_at(p, edges);
        Eigen::MatrixXd A = J.transpose() * J;
        Eigen::VectorXd grad = J.transpose() *
                               Eigen::Map<const Eigen::VectorXd>(
                                   r.data(), static_cast<Eigen::Index>(r.size()));
        while (true) {
            Eigen::MatrixXd damped = A;
            damped.diagonal().array() += lambda;
            Eigen::VectorXd step = damped.ldlt().solve(-grad);
            Eigen::VectorXd trial = p + step;
            std::vector<double> trial_r = residuals_at(trial, edges);
            double trial_ssq = sum_squares(trial_r);
            if (trial_ssq < ssq) {
                check_no_collapse(trial, edges);
                p = trial;
                r = std::move(trial_r);
                ssq = trial_ssq;
                lambda = std::max(lambda / opts.damping_factor, kMinDamping);
                break;
            }
            lambda = std::min(lambda * opts.damping_factor, kMaxDamping);
            if (lambda >= kMaxDamping) {
                stuck = true;
                break;
            }
        }
    }

    trace.final_max_residual = max_abs(r);
    trace.converged = trace.final_max_residual <= opts.residual_target;
    Graph refined = g;
    for (int v = 0; v < g.vertex_count(); ++v) {
        refined.vertices[v] = {p[2 * v], p[2 * v + 1]};
        trace.max_vertex_displacement =
            std::max(trace.max_vertex_displacement,
                     distance(refined.vertices[v], g.vertices[v]));
    }
    if (!trace.converged) {
        std::ostringstream msg;
        msg << "refinement stalled at max residual "
            << trace.final_max_residual << " after " << trace.iterations
            << " iterations (target " << opts.residual_target << ")";
        throw DidNotConverge(msg.str(), std::move(refined), trace);
    }
    return {std::move(refined), trace};
}

} // namespace mgk
