#include "ssmkit/parzen_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssmkit/error.hpp"
#include "ssmkit/parallel.hpp"

namespace ssmkit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kDensityFloor = 1e-300;

double bbox_diagonal(const Eigen::MatrixX3d& points) {
    const Eigen::RowVector3d lo = points.colwise().minCoeff();
    const Eigen::RowVector3d hi = points.colwise().maxCoeff();
    return (hi - lo).norm();
}

} // namespace

Eigen::VectorXd parzen_bandwidths(const Eigen::MatrixX3d& points, double target_neighbors) {
    const Eigen::Index n = points.rows();
    if (n < 2) throw ValidationError("parzen bandwidths require at least 2 particles");

    const double scale = std::max(bbox_diagonal(points), 1e-12);
    const double sigma_min = 1e-9 * scale;
    const double sigma_max = 10.0 * scale;
    const double target = std::min(target_neighbors, 0.6 * static_cast<double>(n - 1));

    Eigen::VectorXd sigmas(n);
    parallel_for(n, [&](std::int64_t j) {
        // Start at the nearest-neighbor distance.
        double nn = std::numeric_limits<double>::infinity();
        for (Eigen::Index l = 0; l < n; ++l) {
            if (l == j) continue;
            nn = std::min(nn, (points.row(j) - points.row(l)).norm());
        }
        double sigma = std::clamp(nn, sigma_min, sigma_max);

        for (int iter = 0; iter < 60; ++iter) {
            double neff = 0.0;
            for (Eigen::Index l = 0; l < n; ++l) {
                if (l == j) continue;
                const double d2 = (points.row(j) - points.row(l)).squaredNorm();
                neff += std::exp(-d2 / (2.0 * sigma * sigma));
            }
            if (std::abs(neff - target) <= 1e-3 * target) break;
            const double ratio = target / std::max(neff, 1e-9);
            sigma *= std::clamp(std::sqrt(ratio), 0.5, 2.0);
            sigma = std::clamp(sigma, sigma_min, sigma_max);
        }
        sigmas[j] = sigma;
    });
    return sigmas;
}

ParzenEval parzen_entropy(const Eigen::MatrixX3d& points, const Eigen::VectorXd& bandwidths) {
    const Eigen::Index n = points.rows();
    if (n < 2) throw ValidationError("parzen entropy requires at least 2 particles");
    if (bandwidths.size() != n) throw ValidationError("bandwidth count mismatch");

    // Pass 1: densities.
    Eigen::VectorXd density(n);
    parallel_for(n, [&](std::int64_t j) {
        const double s2 = bandwidths[j] * bandwidths[j];
        const double norm = std::pow(kTwoPi * s2, -1.5);
        double p = 0.0;
        for (Eigen::Index l = 0; l < n; ++l) {
            if (l == j) continue;
            const double d2 = (points.row(j) - points.row(l)).squaredNorm();
            p += norm * std::exp(-d2 / (2.0 * s2));
        }
        density[j] = std::max(p / static_cast<double>(n - 1), kDensityFloor);
    });

    ParzenEval out;
    double h = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) h += std::log(density[j]);
    out.entropy = -h / static_cast<double>(n);

    // Pass 2: per-particle gradients. x_m enters its own density and, as a
    // neighbor, every other p_j.
    out.gradient.resize(n, 3);
    const double inv_n = 1.0 / static_cast<double>(n);
    const double inv_m1 = 1.0 / static_cast<double>(n - 1);
    parallel_for(n, [&](std::int64_t m) {
        const double sm2 = bandwidths[m] * bandwidths[m];
        const double norm_m = std::pow(kTwoPi * sm2, -1.5);
        Eigen::RowVector3d own = Eigen::RowVector3d::Zero();
        Eigen::RowVector3d cross = Eigen::RowVector3d::Zero();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == m) continue;
            const Eigen::RowVector3d diff_jm = points.row(j) - points.row(m);
            const double d2 = diff_jm.squaredNorm();

            own += norm_m * std::exp(-d2 / (2.0 * sm2)) * diff_jm / sm2;

            const double sj2 = bandwidths[j] * bandwidths[j];
            const double norm_j = std::pow(kTwoPi * sj2, -1.5);
            cross += (norm_j * std::exp(-d2 / (2.0 * sj2)) / density[j]) * diff_jm / sj2;
        }
        const Eigen::RowVector3d g = -(inv_n * inv_m1) * (own / density[m] + cross);
        out.gradient.row(m) = g;
    });
    return out;
}

ParzenEval parzen_entropy_serial(const Eigen::MatrixX3d& points, const Eigen::VectorXd& bandwidths) {
    const Eigen::Index n = points.rows();
    if (n < 2) throw ValidationError("parzen entropy requires at least 2 particles");
    if (bandwidths.size() != n) throw ValidationError("bandwidth count mismatch");

    auto kernel = [](double d2, double sigma) {
        const double s2 = sigma * sigma;
        return std::pow(kTwoPi * s2, -1.5) * std::exp(-d2 / (2.0 * s2));
    };
    auto density_of = [&](Eigen::Index j) {
        double p = 0.0;
        for (Eigen::Index l = 0; l < n; ++l) {
            if (l == j) continue;
            p += kernel((points.row(j) - points.row(l)).squaredNorm(), bandwidths[j]);
        }
        return std::max(p / static_cast<double>(n - 1), kDensityFloor);
    };

    ParzenEval out;
    double h = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) h += std::log(density_of(j));
    out.entropy = -h / static_cast<double>(n);

    out.gradient.setZero(n, 3);
    for (Eigen::Index m = 0; m < n; ++m) {
        Eigen::RowVector3d own = Eigen::RowVector3d::Zero();
        Eigen::RowVector3d cross = Eigen::RowVector3d::Zero();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == m) continue;
            const Eigen::RowVector3d diff_jm = points.row(j) - points.row(m);
            const double d2 = diff_jm.squaredNorm();
            own += kernel(d2, bandwidths[m]) * diff_jm / (bandwidths[m] * bandwidths[m]);
            cross += kernel(d2, bandwidths[j]) / density_of(j) * diff_jm /
                     (bandwidths[j] * bandwidths[j]);
        }
        out.gradient.row(m) =
            -(own / density_of(m) + cross) / static_cast<double>(n * (n - 1));
    }
    return out;
}

} // namespace ssmkit
