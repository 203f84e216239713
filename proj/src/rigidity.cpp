#include "mgk/rigidity.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Dense>

#include "mgk/errors.hpp"

namespace mgk {

namespace {

// Orthonormal basis of the planar rigid-body motions at this realization:
// x-translation, y-translation, infinitesimal rotation (-y_i, x_i).
Eigen::MatrixXd trivial_motions(const Graph& g) {
    int n = g.vertex_count();
    Eigen::MatrixXd T(2 * n, 3);
    for (int v = 0; v < n; ++v) {
        T(2 * v, 0) = 1.0;
        T(2 * v + 1, 0) = 0.0;
        T(2 * v, 1) = 0.0;
        T(2 * v + 1, 1) = 1.0;
        T(2 * v, 2) = -g.vertices[v].y;
        T(2 * v + 1, 2) = g.vertices[v].x;
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(T);
    return qr.householderQ() * Eigen::MatrixXd::Identity(2 * n, 3);
}

bool all_collinear(const Graph& g) {
    int n = g.vertex_count();
    Eigen::MatrixXd centered(n, 2);
    Point2 mean{0.0, 0.0};
    for (const Point2& p : g.vertices) mean = mean + p;
    mean = (1.0 / n) * mean;
    for (int v = 0; v < n; ++v) {
        centered(v, 0) = g.vertices[v].x - mean.x;
        centered(v, 1) = g.vertices[v].y - mean.y;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
    auto sv = svd.singularValues();
    return sv(1) <= 1e-12 * std::max(sv(0), 1.0);
}

} // namespace

Eigen::MatrixXd rigidity_matrix(const Graph& g) {
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(g.edges.size()), 2 * g.vertex_count());
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [i, j] = g.edges[e];
        Point2 d = g.vertices[i] - g.vertices[j];
        auto row = static_cast<Eigen::Index>(e);
        R(row, 2 * i) = d.x;
        R(row, 2 * i + 1) = d.y;
        R(row, 2 * j) = -d.x;
        R(row, 2 * j + 1) = -d.y;
    }
    return R;
}

int numeric_rank(const Eigen::MatrixXd& m, double tol_factor) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    auto sv = svd.singularValues();
    double threshold =
        tol_factor * sv(0) * static_cast<double>(std::max(m.rows(), m.cols()));
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) ++rank;
    }
    return rank;
}

RigidityReport analyze_rigidity(const Graph& g, double tol_factor) {
    int n = g.vertex_count();
    if (n < 3) {
        std::ostringstream msg;
        msg << "rigidity analysis needs at least 3 vertices, got " << n;
        throw DegenerateFramework(msg.str());
    }
    if (all_collinear(g)) {
        throw DegenerateFramework(
            "all vertices are collinear; the trivial-motion dimension "
            "would not be 3");
    }

    RigidityReport report;
    report.vertex_count = n;
    report.edge_count = g.edge_count();

    Eigen::MatrixXd R = rigidity_matrix(g);
    Eigen::MatrixXd null_basis; // columns span null(R)
    if (report.edge_count == 0) {
        report.rank = 0;
        report.rank_tolerance_used = 0.0;
        null_basis = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    } else {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(R, Eigen::ComputeFullV);
        auto sv = svd.singularValues();
        report.rank_tolerance_used =
            tol_factor * sv(0) *
            static_cast<double>(std::max(R.rows(), R.cols()));
        int rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i) {
            if (sv(i) > report.rank_tolerance_used) ++rank;
        }
        report.rank = rank;
        null_basis = svd.matrixV().rightCols(2 * n - rank);
    }
    report.internal_dof = 2 * n - report.trivial_dim - report.rank;
    report.rigid = report.internal_dof == 0;

    if (report.internal_dof > 0) {
        // Remove the trivial components from the null space, then
        // re-orthonormalize what is left; the three rigid-body directions
        // collapse to (near) zero and the leading internal_dof directions
        // survive.
        Eigen::MatrixXd T = trivial_motions(g);
        Eigen::MatrixXd projected =
            null_basis - T * (T.transpose() * null_basis);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(projected, Eigen::ComputeThinU);
        for (int k = 0; k < report.internal_dof; ++k) {
            report.flex_basis.push_back(svd.matrixU().col(k));
        }
    }
    return report;
}

} // namespace mgk
