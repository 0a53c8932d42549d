#pragma once

#include <cstdint>

#include "qcolor/gates.hpp"
#include "qcolor/measure.hpp"

namespace qcolor {

struct RgbColor {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const RgbColor&) const = default;
};

// h in degrees [0, 360); s, v fractions in [0, 1]. Hue is 0 by convention
// when s == 0.
struct HsvColor {
    double h = 0.0;
    double s = 0.0;
    double v = 0.0;
};

// A channel value tied to its rotation angle: theta = arccos(2 value/max - 1),
// so P(|0>) = cos^2(theta/2) = value/max.
struct ChannelEncoding {
    int value = 0;
    int max = 255;
    double theta = 0.0;
};

// Maps a channel value onto [0, pi]; monotone decreasing in value.
// Throws ArgumentError when value is outside [0, max] or max < 1.
double theta_from_channel(int value, int max = 255);

ChannelEncoding encode_channel(int value, int max = 255);

// Round-half-up of prob0 * max, clamped to [0, max]. Excursions beyond
// [0, 1] larger than 1e-9 throw ArgumentError; smaller ones are clamped.
int channel_from_prob0(double prob0, int max = 255);

// 3-qubit circuit [RY(theta_r) q0, RY(theta_g) q1, RY(theta_b) q2]; applied
// to |000> it yields a product state whose per-qubit |0>-marginals are
// r/255, g/255, b/255.
Circuit encode_rgb_circuit(RgbColor color);

// Reads each channel as the sum of the four basis-state probabilities with
// that qubit in |0>, then channel_from_prob0. Throws ShapeError when the
// estimate does not cover a 3-qubit space.
RgbColor decode_rgb(const ProbEstimate& est);

// Standard hexcone conversions; rgb -> hsv -> rgb returns each channel
// within one level.
HsvColor rgb_to_hsv(RgbColor color);
RgbColor hsv_to_rgb(HsvColor color);

// 3-qubit circuit over (H, S, V) qubits; each channel is normalized to
// [0, 1] (hue by h/360) and run through the same theta law as RGB.
Circuit encode_hsv_circuit(HsvColor color);

} // namespace qcolor
