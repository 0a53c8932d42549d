#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qcolor/pipeline.hpp"

namespace qcolor {

enum class EntangleKind { channel_remap, hsv_control, cross_image, external_data };

const char* entangle_kind_name(EntangleKind kind);

// Qubit roles a gate plan may reference. Rp/Gp/Bp are the primed channels
// of the second image; D stands for every data qubit of an external signal.
enum class Role { R, G, B, H, S, V, Rp, Gp, Bp, D };

const char* role_name(Role role);

// One templated gate over roles instead of qubit indices. Rotation gates
// without an explicit angle take the spec's strength.
struct PlanGate {
    GateKind kind;
    std::vector<Role> roles;
    std::optional<double> angle;

    bool operator==(const PlanGate&) const = default;
};

// A role-based circuit template plus the kind that fixes which roles are
// valid and how qubits are laid out.
struct EntangleSpec {
    EntangleKind kind = EntangleKind::channel_remap;
    std::vector<PlanGate> plan;
    double strength = 1.5707963267948966; // pi/2

    bool identity() const { return plan.empty(); }
};

// External musical signal: pitch classes 0..11, each with a weight in
// [0, 1]. A data qubit per pitch is prepared with RY(arccos(2 weight - 1)),
// so weight 1 leaves the control inactive (|0>) and weight 0 fully active.
struct ChordSignal {
    std::map<int, double> notes;
};

ChordSignal g_major_chord(double weight = 0.5);

struct RestoreReport {
    double max_statevector_deviation = 0.0;
    std::optional<double> psnr_db; // sampled mode only
    bool restored = false;
};

// 3-qubit recipe over (R, G, B). spec.kind must be channel_remap.
PixelRecipe channel_entangle_circuit(const EntangleSpec& spec);

// 6-qubit recipe: (R, G, B) prepared from the pixel, (H, S, V) from its
// HSV conversion; the plan couples them; only RGB qubits are decoded.
// spec.kind must be hsv_control.
PixelRecipe hsv_control_circuit(const EntangleSpec& spec);

// 6-qubit recipe over (R, G, B) of the processed image and (R', G', B') of
// the partner image. spec.kind must be cross_image.
PixelRecipe cross_image_circuit(const EntangleSpec& spec);

// Runs cross_image_circuit over both images (same dimensions, else
// ShapeError) and decodes the unprimed register.
std::pair<ImageBuffer, RunStats> cross_image_entangle(const ImageBuffer& image_a,
                                                      const ImageBuffer& image_b,
                                                      const EntangleSpec& spec,
                                                      std::optional<std::uint64_t> shots,
                                                      std::uint64_t seed);

// (R, G, B) plus one data qubit per pitch class (ascending). Plan gates
// naming role D materialize once per data qubit; their rotation angle gets
// a per-pitch offset of strength * 2*pi*pitch/12. spec.kind must be
// external_data; an empty chord throws PlanError.
PixelRecipe data_entangle_circuit(const ChordSignal& chord, const EntangleSpec& spec);

// Builds the recipe for a spec of any kind (convenience dispatch).
// cross_image recipes read the partner image from the pixel context.
PixelRecipe make_recipe(const EntangleSpec& spec, const ChordSignal* chord = nullptr);

// Runs recipe ops followed by their inverse on every pixel. Exact mode
// restores the input bit for bit; the report carries the worst per-pixel
// statevector deviation of the round trip and, in sampled mode, the PSNR
// of output vs input.
std::pair<ImageBuffer, RestoreReport> symmetric_restore(const ImageBuffer& image,
                                                        const PixelRecipe& recipe,
                                                        const RunOptions& options);

struct DislocationEntry {
    std::uint64_t shots = 0; // 0 = exact baseline
    double rms_error = 0.0;
    std::array<double, 3> rms_per_channel = {0.0, 0.0, 0.0};
    std::size_t dislocations = 0;
};

struct DislocationStats {
    std::vector<DislocationEntry> entries;
    // rms_error[i] / rms_error[i+1] for consecutive sampled entries.
    std::vector<double> rms_ratios;
    std::uint64_t seed = 0;
};

// Identity color recipe with coordinate position encoding, run at each
// shot count. Throws ArgumentError when shot_counts is empty.
DislocationStats dislocation_experiment(const ImageBuffer& image,
                                        const std::vector<std::uint64_t>& shot_counts,
                                        std::uint64_t seed,
                                        bool include_exact_baseline = false);

// Joint-channel PSNR with peak 255; +infinity for identical images.
double psnr_db(const ImageBuffer& a, const ImageBuffer& b);

} // namespace qcolor
