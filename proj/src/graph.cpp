#include "pseudograph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pseudograph {

PartialLabelGrid::PartialLabelGrid(std::size_t height, std::size_t width,
                                   std::uint32_t num_classes, std::vector<std::uint16_t> labels)
    : height_(height), width_(width), num_classes_(num_classes), labels_(std::move(labels)) {
    if (labels_.size() != height_ * width_)
        throw std::invalid_argument("PartialLabelGrid: label count does not match grid size");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        std::uint16_t l = labels_[i];
        if (l == kIgnoredLabel) {
            ig_.push_back(static_cast<std::uint32_t>(i));
        } else if (l == 0) {
            bg_.push_back(static_cast<std::uint32_t>(i));
        } else if (l <= num_classes_) {
            fg_.push_back(static_cast<std::uint32_t>(i));
        } else {
            throw std::invalid_argument("PartialLabelGrid: label " + std::to_string(l) +
                                        " at node " + std::to_string(i) + " exceeds class count " +
                                        std::to_string(num_classes_));
        }
    }
}

SelfAugmentedAffinity build_self_augmented(const SparseMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("build_self_augmented: affinity must be square");
    constexpr double kSymTol = 1e-12;
    for (const Triplet& t : a.entries()) {
        if (t.value < 0.0)
            throw std::invalid_argument("build_self_augmented: negative entry at (" +
                                        std::to_string(t.row) + "," + std::to_string(t.col) + ")");
        if (t.row == t.col)
            throw std::invalid_argument("build_self_augmented: nonzero diagonal at (" +
                                        std::to_string(t.row) + "," + std::to_string(t.row) + ")");
        auto mirror = a.row(t.col);
        auto it = std::lower_bound(mirror.begin(), mirror.end(), t.row,
                                   [](const Triplet& e, std::uint32_t c) { return e.col < c; });
        double mv = (it != mirror.end() && it->col == t.row) ? it->value : 0.0;
        if (std::abs(mv - t.value) > kSymTol)
            throw std::invalid_argument("build_self_augmented: asymmetry beyond tolerance at (" +
                                        std::to_string(t.row) + "," + std::to_string(t.col) + ")");
    }
    return SelfAugmentedAffinity{a, add_identity(a)};
}

SparseMatrix build_laplacian_kernel(const GuidanceImage& img, std::size_t window,
                                    double sigma_color, double sigma_xy) {
    if (window % 2 == 0 || window < 1)
        throw std::invalid_argument("build_laplacian_kernel: window must be odd and >= 1");
    if (sigma_color <= 0.0 || sigma_xy <= 0.0)
        throw std::invalid_argument("build_laplacian_kernel: sigmas must be positive");

    const std::ptrdiff_t h = static_cast<std::ptrdiff_t>(img.height);
    const std::ptrdiff_t w = static_cast<std::ptrdiff_t>(img.width);
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(window / 2);
    const double inv_color = 1.0 / (2.0 * sigma_color * sigma_color);
    const double inv_xy = 1.0 / (2.0 * sigma_xy * sigma_xy);

    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(h * w) * window * window);
    for (std::ptrdiff_t y = 0; y < h; ++y) {
        for (std::ptrdiff_t x = 0; x < w; ++x) {
            const std::uint32_t i = static_cast<std::uint32_t>(y * w + x);
            const double* ci = img.pixels.row_ptr(i);
            entries.push_back({i, i, 1.0});
            // strictly later nodes only; each unordered pair computed once and mirrored
            for (std::ptrdiff_t dy = 0; dy <= half; ++dy) {
                std::ptrdiff_t dx0 = (dy == 0) ? 1 : -half;
                for (std::ptrdiff_t dx = dx0; dx <= half; ++dx) {
                    std::ptrdiff_t ny = y + dy, nx = x + dx;
                    if (ny < 0 || ny >= h || nx < 0 || nx >= w) continue;
                    const std::uint32_t j = static_cast<std::uint32_t>(ny * w + nx);
                    const double* cj = img.pixels.row_ptr(j);
                    double color2 = 0.0;
                    for (int ch = 0; ch < 3; ++ch) {
                        double d = ci[ch] - cj[ch];
                        color2 += d * d;
                    }
                    double xy2 = static_cast<double>(dx * dx + dy * dy);
                    double v = std::exp(-color2 * inv_color - xy2 * inv_xy);
                    entries.push_back({i, j, v});
                    entries.push_back({j, i, v});
                }
            }
        }
    }
    return SparseMatrix(img.nodes(), img.nodes(), std::move(entries));
}

SparseMatrix affinity_from_features(const FeatureGrid& fg, std::size_t radius, double gamma) {
    if (radius < 1) throw std::invalid_argument("affinity_from_features: radius must be >= 1");
    if (gamma <= 0.0) throw std::invalid_argument("affinity_from_features: gamma must be positive");

    const std::ptrdiff_t h = static_cast<std::ptrdiff_t>(fg.height);
    const std::ptrdiff_t w = static_cast<std::ptrdiff_t>(fg.width);
    const std::ptrdiff_t r = static_cast<std::ptrdiff_t>(radius);
    const std::size_t dim = fg.dim();

    std::vector<Triplet> entries;
    for (std::ptrdiff_t y = 0; y < h; ++y) {
        for (std::ptrdiff_t x = 0; x < w; ++x) {
            const std::uint32_t i = static_cast<std::uint32_t>(y * w + x);
            const double* vi = fg.features.row_ptr(i);
            for (std::ptrdiff_t dy = 0; dy <= r; ++dy) {
                std::ptrdiff_t dx0 = (dy == 0) ? 1 : -r;
                for (std::ptrdiff_t dx = dx0; dx <= r; ++dx) {
                    std::ptrdiff_t ny = y + dy, nx = x + dx;
                    if (ny < 0 || ny >= h || nx < 0 || nx >= w) continue;
                    const std::uint32_t j = static_cast<std::uint32_t>(ny * w + nx);
                    const double* vj = fg.features.row_ptr(j);
                    double dist2 = 0.0;
                    for (std::size_t d = 0; d < dim; ++d) {
                        double diff = vi[d] - vj[d];
                        dist2 += diff * diff;
                    }
                    double v = std::exp(-gamma * dist2);
                    entries.push_back({i, j, v});
                    entries.push_back({j, i, v});
                }
            }
        }
    }
    return SparseMatrix(fg.nodes(), fg.nodes(), std::move(entries));
}

}  // namespace pseudograph
