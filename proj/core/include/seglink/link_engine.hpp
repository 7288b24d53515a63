#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "seglink/closed_form.hpp"
#include "seglink/geom.hpp"

namespace seglink {

/// Result of summing the closed form over all edge pairs of a two-component
/// polygonal link. lk_total is within 1e-12 of an integer when both
/// components are closed cycles.
struct LinkReport {
    double lk_total = 0.0;
    std::size_t pair_count = 0;                   // |edges1| * |edges2|
    std::array<std::size_t, 4> branch_counts{};   // indexed by LkBranch
    std::vector<std::string> warnings;

    std::size_t branch_count(LkBranch b) const {
        return branch_counts[static_cast<std::size_t>(b)];
    }
};

/// Pairwise linking number of a polygonal link: the sum of the per-pair
/// closed form over edges1 x edges2, accumulated in lexicographic pair order
/// with Kahan compensation.
///
/// Warnings report dropped zero-length edges and nearly coplanar pairs whose
/// projections cross (there the pairwise value sits next to its jump across
/// d = 0, so tiny perturbations move the contribution by up to 1).
///
/// Throws std::invalid_argument for malformed components and geometry_error
/// when the components touch or intersect (minimum inter-component distance
/// at or below 1e-9 of the bounding-box diagonal).
LinkReport lk_link(const PolyLink& link);

/// Example links with known linking numbers, keyed by name:
/// hopf_square (-1), hopf_triangle (+1), solomon (+2), whitehead (0).
const std::map<std::string, PolyLink>& builtin_links();

}  // namespace seglink
