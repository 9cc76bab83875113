#pragma once

#include "ccmc/graph.hpp"
#include "ccmc/weights.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ccmc {

// Per-element sample draws, row-major n x t_sp. Row i holds t_sp independent
// draws from Uniform[a_i - d, a_i + d] produced by a dedicated substream, so
// the matrix regenerates bit-exactly from (seed, model, t_sp).
struct SampleMatrix {
    std::size_t n = 0;
    std::size_t t_sp = 0;
    std::uint64_t seed = 0;
    std::vector<double> values;

    const double* row(std::size_t i) const { return values.data() + i * t_sp; }
};

SampleMatrix generate_samples(const WeightModel& model, std::size_t t_sp,
                              std::uint64_t seed);

// k = ceil(t_sp * alpha), the 1-based rank of the returned order statistic.
std::size_t quantile_index(std::size_t t_sp, double alpha);

// k-th largest of the per-sample solution totals (takes its argument by value;
// selection via nth_element, identical to a full descending sort at rank k).
double quantile_from_sums(std::vector<double> sums, double alpha);

// Per-sample solution totals: entry j = sum over selected i of row(i)[j].
using SampleSumVector = std::vector<double>;

SampleSumVector make_sample_sums(const BitVector& selection, const SampleMatrix& matrix);

void samplesum_apply_flips(SampleSumVector& sums, const SampleMatrix& matrix,
                           const std::vector<Flip>& flips);

double sampling_weight(const BitVector& selection, const SampleMatrix& matrix,
                       double alpha);

// Compact persistence: enough to regenerate the matrix deterministically plus
// a checksum of row 0 as a tripwire against generator or parameter drift.
struct SampleManifest {
    int version = 1;
    WeightKind kind = WeightKind::Iid;
    std::size_t n = 0;
    double d = 0.0;
    std::size_t t_sp = 0;
    std::uint64_t seed = 0;
    std::string generator = "splitmix64-u53";
    std::uint64_t row0_checksum = 0;
};

std::uint64_t fnv1a_doubles(const double* values, std::size_t count);

SampleManifest make_manifest(const WeightModel& model, const SampleMatrix& matrix);
void write_manifest(const SampleManifest& manifest, const std::string& path);
SampleManifest read_manifest(const std::string& path);

// Full binary dump for cross-implementation validation; refused above
// n * t_sp = 10^6 entries.
void write_dump(const SampleMatrix& matrix, const std::string& path);
SampleMatrix read_dump(const std::string& path);

} // namespace ccmc
