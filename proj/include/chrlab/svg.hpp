// svg.hpp -- deterministic SVG rendering of lattice figures: grid,
// guide segments, staircase paths, and step labels.

#pragma once

#include "chrlab/christoffel.hpp"
#include "chrlab/word.hpp"

#include <string>
#include <vector>

namespace chrlab {

struct SvgLabel {
    double x = 0;
    double y = 0;
    std::string text;
};

struct SvgSegment {
    double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
};

/// Everything to draw, in lattice coordinates (y grows upward; the
/// renderer flips the axis). A scene must contain at least one path or
/// guide.
struct SvgScene {
    std::vector<LatticePath> paths;
    std::vector<SvgSegment> guides;
    std::vector<SvgLabel> labels;
};

/// Renders the scene: one grid group padded one cell beyond the
/// bounding box, one line element per guide, one polyline per path,
/// one text element per label. Identical scenes render to identical
/// bytes. Styling is fixed (see README).
std::string render_svg(const SvgScene& scene);

/// Path of the given side plus its guiding segment and step labels.
SvgScene christoffel_scene(const Slope& s, PathSide side);

/// The two-ray construction for the doubly periodic words built from a
/// core m and letters x != y: left and right staircases split at index
/// 0 plus their two parallel guide rays, over window [lo, hi).
SvgScene b4_scene(const Word& m, Letter x, Letter y, std::int64_t lo, std::int64_t hi);

}  // namespace chrlab
