#pragma once

#include <string_view>

#include "qcolor/entangle.hpp"

namespace qcolor {

// Parses the gate-plan text format: one gate per line,
//
//   GATE role [role ...] [angle]
//
// with '#' starting a comment and blank lines ignored. Roles are
// R G B H S V R' G' B' D; gates are the simulator's set. The entanglement
// kind is inferred from the roles used (HSV roles -> hsv_control, primed
// -> cross_image, D -> external_data, plain RGB -> channel_remap); an
// empty script yields the identity channel_remap spec.
// Throws ParseError (with line and column) on syntax errors or when no
// kind admits the roles used together.
EntangleSpec parse_gate_plan(std::string_view text);

} // namespace qcolor
