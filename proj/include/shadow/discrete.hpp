#pragma once

#include <cstddef>

#include "shadow/core.hpp"

namespace shadow {

enum class ImpactKind { Top, Side };
enum class IncomingDirection { Vertical, FromLeft, FromRight };

struct ImpactEvent {
  std::size_t site = 0;  // column the particle contacted
  ImpactKind kind = ImpactKind::Top;
  IncomingDirection incoming = IncomingDirection::Vertical;
};

// March a particle released at (x0, h_max + 2) with direction
// (sin theta, -cos theta) across unit-width columns with periodic wrap.
// Within a column the particle lands on top when its height reaches the
// column floor; crossing a boundary into a column whose floor is above the
// trajectory height is a side hit. An exact corner graze counts as Top.
// Heights must be integer-valued; |theta| < pi/2; x0 in [0, L*dx).
ImpactEvent trace_particle(const HeightField& field, double x0, double theta);

// Resolve an impact. Top deposits on the struck column. A side hit either
// slides into the groove column the particle came from (FallDown) or leaves
// the field unchanged (Remove). Returns whether the particle stuck.
bool apply_impact(HeightField& field, const ImpactEvent& event, SideRule side_rule);

// Full Monte-Carlo run: per particle draw x0 uniform on [0, L), then theta
// uniform on [-theta_max, theta_max]; trace and apply. Time advances by 1/L
// per launched particle whatever the side rule. Samples (t, W, mean h) at
// log-spaced steps and stores snapshots at the requested times.
RunRecord run_discrete(const DiscreteParams& params);

}  // namespace shadow
