#pragma once

#include "sheafrig/motion.hpp"

namespace sheafrig {

// Checked algebraic conditions under which a k-extension of a graph motion
// spec preserves independence. For each deleted edge e_i = u_i u_i' the new
// subspace must satisfy
//   S* + S(u_i) = S* + S(u_i') = S(u_i) + S(u_i'),
// and for every new edge the complementary intersection of pair sums must
// add with the far endpoint's subspace to the whole space (an empty
// intersection counts as the whole space).
struct MotionExtensionCertificate {
    ExtensionMove move;
    Subspace new_subspace;
    std::vector<bool> replaced_edge_conditions;  // per deleted edge
    std::vector<bool> attach_conditions;         // per attach edge
    std::vector<bool> replaced_sum_conditions;   // per deleted edge
    bool valid = false;
};

MotionExtensionCertificate check_motion_extension(const MotionSheafSpec& spec, const ExtensionMove& move,
                                                  const Subspace& new_subspace);

// Applies a certified move; requires h1 = 0 before and re-verifies h1 = 0
// after.
MotionSheafSpec extend_motion(const MotionSheafSpec& spec, const MotionExtensionCertificate& cert);

} // namespace sheafrig
