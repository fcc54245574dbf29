#pragma once

#include <vector>

#include "deltaflow/geometry.hpp"
#include "deltaflow/profile.hpp"

namespace deltaflow {

struct ConstructionSpec {
    int n;
    double c;
    Profile profile;
};

/// Vertex angle 2 pi k / n. Every generator samples the circle through this
/// one expression so that families agree bit-for-bit where they should.
double circle_angle(int k, int n);

/// Regular n-gon of diameter 2. Even n: the n-th roots of unity, with each
/// antipode stored as the exact negation of its partner. Odd n: scaled by
/// 1/cos(pi/(2n)) so the longest diagonal, not the circumdiameter, is 2.
Configuration regular_ngon(int n);

/// delta_k = (c/n) p(2 pi k / n) for k = 0..n/2-1.
std::vector<double> push_offsets(int n, double c, const Profile& profile);

/// z_k = (1 + delta_k) e^{2 pi i k/n}, z_{k+n/2} = -(1 - delta_k) e^{2 pi i k/n}:
/// each diameter pair of the regular n-gon translated rigidly by delta_k along
/// its own direction. c = 0 reproduces regular_ngon(n) exactly.
Configuration push_construction(int n, double c, const Profile& profile);
Configuration push_construction(const ConstructionSpec& spec);

/// Regular even n-gon with the single diameter pair (z_0, z_{n/2}) = (1, -1)
/// translated by +eps along the real axis; the pair keeps length 2.
Configuration single_diameter_move(int n, double eps);

}  // namespace deltaflow
