#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcolor/image.hpp"

namespace qcolor {

struct PixelRecord {
    std::size_t x = 0;
    std::size_t y = 0;
    RgbColor color;

    bool operator==(const PixelRecord&) const = default;
};

// Everything a recipe may look at when building one pixel's program.
// partner is the second image for cross-image operations (same size as the
// processed image), null otherwise.
struct PixelContext {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t index = 0;
    std::size_t width = 0;
    std::size_t height = 0;
    RgbColor color;
    const ImageBuffer* partner = nullptr;
};

// One pixel's circuits, split so the operation part can be inverted without
// undoing the state preparation. prep holds the encodings (color, ancilla,
// position); ops holds the operation gates. rgb_qubits names the qubits the
// color is decoded from; position_qubits, when set, name the (x, y) qubits.
struct PixelProgram {
    Circuit prep;
    Circuit ops;
    std::array<std::size_t, 3> rgb_qubits = {0, 1, 2};
    std::optional<std::array<std::size_t, 2>> position_qubits;
};

using PixelRecipe = std::function<PixelProgram(const PixelContext&)>;

struct PixelRunResult {
    PixelRecord record;
    std::size_t decoded_x = 0;
    std::size_t decoded_y = 0;
    RgbColor decoded_color;
    bool dislocated = false;
};

struct RunStats {
    std::array<double, 3> rms_per_channel = {0.0, 0.0, 0.0};
    double mean_abs_error = 0.0;
    std::size_t dislocations = 0;
    std::uint64_t shots = 0; // 0 in exact mode
    std::uint64_t seed = 0;
    std::string prng_name;
};

struct RunOptions {
    std::optional<std::uint64_t> shots; // nullopt = exact probabilities
    std::uint64_t seed = 0;
    bool parallel = true;
    const ImageBuffer* partner = nullptr;
};

// Runs the recipe on every pixel: builds prep + ops, measures (exact or
// shot-sampled with a per-pixel stream derived from (seed, row-major
// index)), decodes color and position. Results come back in row-major
// order regardless of execution order. A recipe failure is rethrown with
// the pixel named.
std::vector<PixelRunResult> run_pixels(const ImageBuffer& image, const PixelRecipe& recipe,
                                       const RunOptions& options);

// run_pixels plus the write-back: decoded colors land at decoded positions,
// last writer wins in row-major order, vacated positions keep the input
// pixel. Statistics compare the final buffer with the input.
std::pair<ImageBuffer, RunStats> process_image(const ImageBuffer& image,
                                               const PixelRecipe& recipe,
                                               const RunOptions& options);

// Plain RGB encode/decode with no operation gates.
PixelRecipe identity_recipe();

// Wraps a recipe with a 2-qubit coordinate register appended after the
// inner program's qubits.
PixelRecipe with_coordinate_position(PixelRecipe inner);

} // namespace qcolor
