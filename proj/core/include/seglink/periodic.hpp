#pragma once

#include <vector>

#include "seglink/geom.hpp"

namespace seglink {

/// A probe segment plus a unit cell of segments replicated over integer
/// combinations of 1..3 linearly independent translation vectors with
/// coefficients in the symmetric range -copies..copies per direction.
struct LatticeSpec {
    Segment probe;
    std::vector<Segment> cell;
    std::vector<Vec3> directions;
    int copies = 0;
};

/// One step of a convergence scan: the lattice sum at a given range and its
/// change against the previous range.
struct ConvergenceRow {
    int n = 0;
    double partial_lk = 0.0;
    double delta_vs_previous = 0.0;  // for n = 0 this is partial_lk itself
};

/// All translated copies of the cell segments, ordered by lexicographic
/// coefficient tuple then by cell index. Size is |cell| * (2n+1)^k.
/// Throws std::invalid_argument for an empty cell, no directions, or
/// linearly dependent directions.
std::vector<Segment> generate_lattice(const LatticeSpec& spec);

/// Compensated sum of the pairwise linking number between the probe and every
/// generated copy. Throws geometry_error if the probe touches any copy.
double periodic_lk(const LatticeSpec& spec);

/// Lattice sums for n = 0..n_max with successive differences.
std::vector<ConvergenceRow> convergence_scan(LatticeSpec spec, int n_max);

/// The reference experiment: a vertical probe segment through the origin
/// against a lattice of oppositely oriented horizontal segments, periodic in
/// k = 1, 2 or 3 directions. Throws std::invalid_argument for other k.
LatticeSpec reference_lattice(int k);

}  // namespace seglink
