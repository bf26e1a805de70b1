#pragma once

#include <cstdint>
#include <vector>

#include "pseudograph/dense_matrix.hpp"
#include "pseudograph/sparse_matrix.hpp"

namespace pseudograph {

inline constexpr std::uint16_t kIgnoredLabel = 0xFFFF;

// Node i of any grid-shaped value lives at (x, y) = (i % width, i / width).
// Every module shares this enumeration.

/// Node features V (N x D) on the feature-resolution grid.
struct FeatureGrid {
    std::size_t height = 0;
    std::size_t width = 0;
    DenseMatrix features;  // N x D

    std::size_t nodes() const { return height * width; }
    std::size_t dim() const { return features.cols(); }
};

/// RGB plane with unit-range channels, one row per node (N x 3). Used both as
/// the downscaled guidance image and as the full-resolution input image.
struct GuidanceImage {
    std::size_t height = 0;
    std::size_t width = 0;
    DenseMatrix pixels;  // N x 3 in [0, 1]

    std::size_t nodes() const { return height * width; }
};

/// Per-node labels: 0 is background, 1..num_classes are foreground classes,
/// kIgnoredLabel marks unlabeled nodes.
class PartialLabelGrid {
public:
    PartialLabelGrid() = default;
    PartialLabelGrid(std::size_t height, std::size_t width, std::uint32_t num_classes,
                     std::vector<std::uint16_t> labels);

    std::size_t height() const { return height_; }
    std::size_t width() const { return width_; }
    std::size_t nodes() const { return height_ * width_; }
    /// Number of foreground classes |C|; the class-probability width is |C|+1.
    std::uint32_t num_classes() const { return num_classes_; }
    std::uint32_t prob_classes() const { return num_classes_ + 1; }

    std::uint16_t label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::uint16_t>& labels() const { return labels_; }

    const std::vector<std::uint32_t>& foreground_nodes() const { return fg_; }
    const std::vector<std::uint32_t>& background_nodes() const { return bg_; }
    const std::vector<std::uint32_t>& ignored_nodes() const { return ig_; }

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::uint32_t num_classes_ = 0;
    std::vector<std::uint16_t> labels_;
    std::vector<std::uint32_t> fg_, bg_, ig_;
};

/// Raw affinity A together with its self-augmented form A + I.
struct SelfAugmentedAffinity {
    SparseMatrix a;
    SparseMatrix a_tilde;

    /// Propagation matrix used by the GCN: A + I, optionally degree-normalized.
    SparseMatrix propagation(bool normalize) const {
        return normalize ? symmetric_normalize(a_tilde) : a_tilde;
    }
};

/// Validates a (square, symmetric within 1e-12, non-negative, zero diagonal)
/// and returns it paired with A + I. Throws std::invalid_argument naming the
/// offending coordinate otherwise.
SelfAugmentedAffinity build_self_augmented(const SparseMatrix& a);

/// Bilateral smoothness kernel over a (window x window) neighborhood of each
/// node, clipped at the borders. Entry (i, j) decays with the color distance
/// in img and the coordinate distance on the feature grid; the diagonal is 1.
SparseMatrix build_laplacian_kernel(const GuidanceImage& img, std::size_t window = 5,
                                    double sigma_color = 1.7320508075688772,
                                    double sigma_xy = 10.0);

/// Feature-similarity affinity exp(-gamma * ||v_i - v_j||^2) between nodes at
/// Chebyshev distance in [1, radius]; zero diagonal, symmetric.
SparseMatrix affinity_from_features(const FeatureGrid& fg, std::size_t radius, double gamma);

}  // namespace pseudograph
