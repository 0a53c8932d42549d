#pragma once

#include <cstddef>
#include <utility>

#include "qcolor/gates.hpp"
#include "qcolor/measure.hpp"

namespace qcolor {

// Pixel-location codecs. Both map the location onto [0, 1] with
// denominator (extent - 1) so the extremes land on theta = pi and 0;
// a degenerate extent of 1 maps to a fixed |0> qubit.

// 2-qubit circuit [RY(theta_x) q0, RY(theta_y) q1].
// Throws ArgumentError when the coordinate is out of range.
Circuit encode_position_coordinate(std::size_t x, std::size_t y, std::size_t width,
                                   std::size_t height);

// x = round(marginal_prob0(q0) * (width - 1)), same for y. Exact estimates
// invert encode_position_coordinate for every valid coordinate.
// Throws ShapeError unless the estimate covers 2 qubits.
std::pair<std::size_t, std::size_t> decode_position_coordinate(const ProbEstimate& est,
                                                               std::size_t width,
                                                               std::size_t height);

// 1-qubit circuit RY(arccos(2 index/(length-1) - 1)).
Circuit encode_position_sequence(std::size_t index, std::size_t length);

// Rounds marginal * (length - 1). Throws ShapeError unless 1-qubit.
std::size_t decode_position_sequence(const ProbEstimate& est, std::size_t length);

} // namespace qcolor
