#include "seglink/link_engine.hpp"

#include <cmath>
#include <limits>

#include "seglink/invariants.hpp"

namespace seglink {

namespace {
constexpr double kContactRel = 1e-9;
}

LinkReport lk_link(const PolyLink& link) {
    const EdgeLists el = edges(link);
    if (el.comp1.empty() || el.comp2.empty()) {
        throw std::invalid_argument("lk_link: component has no usable edges");
    }

    const double scale = bounding_box_diagonal(link);
    double min_dist = std::numeric_limits<double>::infinity();
    for (const Segment& e1 : el.comp1) {
        for (const Segment& e2 : el.comp2) {
            min_dist = std::min(min_dist, min_distance(e1, e2));
        }
    }
    if (min_dist <= kContactRel * scale) {
        throw geometry_error("lk_link: components touch or intersect");
    }

    LinkReport report;
    if (el.filtered > 0) {
        report.warnings.push_back("dropped " + std::to_string(el.filtered) +
                                  " zero-length edge(s)");
    }

    KahanSum acc;
    std::size_t near_jump = 0;
    for (const Segment& e1 : el.comp1) {
        for (const Segment& e2 : el.comp2) {
            const SegmentPairInvariants inv = extract_invariants(e1, e2);
            const LkResult r = lk_from_invariants(inv);
            acc.add(r.value);
            ++report.branch_counts[static_cast<std::size_t>(r.branch)];

            // The per-pair value jumps by 1 across d = 0 when the projections
            // cross; flag pairs evaluated close to that jump.
            if (!inv.parallel && !inv.degenerate() &&
                inv.a1 < 0.0 && inv.b1 > 0.0 && inv.a2 < 0.0 && inv.b2 > 0.0) {
                const double span = std::max({1.0, std::abs(inv.a1), std::abs(inv.b1),
                                              std::abs(inv.a2), std::abs(inv.b2)});
                if (std::abs(inv.d) <= 1e-6 * span) ++near_jump;
            }
        }
    }
    if (near_jump > 0) {
        report.warnings.push_back(
            std::to_string(near_jump) +
            " nearly coplanar edge pair(s) with crossing projections; the pairwise "
            "value is discontinuous at coplanarity");
    }

    report.lk_total = acc.value();
    report.pair_count = el.comp1.size() * el.comp2.size();
    return report;
}

const std::map<std::string, PolyLink>& builtin_links() {
    static const std::map<std::string, PolyLink> links = [] {
        std::map<std::string, PolyLink> m;
        // A square cycle threading a rectangle once; the repeated last vertex
        // makes the wrap edge zero-length, which the edge filter drops.
        m["hopf_square"] = PolyLink{
            {{-2, 0, 2}, {2, 0, 2}, {2, 0, -2}, {-2, 0, 2}},
            {{-1, -2, 0}, {-1, 2, 0}, {1, 2, 0}, {1, -2, 0}},
            true, true};
        m["hopf_triangle"] = PolyLink{
            {{-1, 0, -1}, {-1, 0, 1}, {1, 0, 0}},
            {{0, 0, 0}, {2, 1, 0}, {2, -1, 0}},
            true, true};
        // A hexagon passing twice through the rectangle interior in the same
        // direction and returning outside it both times.
        m["solomon"] = PolyLink{
            {{-0.5, 0, 1}, {-0.5, 0, -1}, {-0.5, 5, 1}, {0.5, -5, -1}, {0.5, -5, 1}, {3, 0, -1}},
            {{-1, -2, 0}, {-1, 2, 0}, {1, 2, 0}, {1, -2, 0}},
            true, true};
        m["whitehead"] = PolyLink{
            {{-3, -2, -1}, {0, -2, -1}, {0, 2, 1}, {0, 0, 1}, {0, 0, 0},
             {3, 0, 0}, {3, 1, 0}, {-3, 1, 0}, {-3, 1, -1}},
            {{-1, 0, -3}, {-1, 0, 3}, {1, 0, 3}, {-1, 0, 3}},
            true, true};
        return m;
    }();
    return links;
}

}  // namespace seglink
