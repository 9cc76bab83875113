#include "ccmc/samples.hpp"

#include "ccmc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ccmc {

SampleMatrix generate_samples(const WeightModel& model, std::size_t t_sp,
                              std::uint64_t seed) {
    if (t_sp == 0)
        throw std::invalid_argument("t_sp must be at least 1");
    SampleMatrix matrix;
    matrix.n = model.size();
    matrix.t_sp = t_sp;
    matrix.seed = seed;
    matrix.values.resize(matrix.n * t_sp);
    const double d = model.dispersion;
    for (std::size_t i = 0; i < matrix.n; ++i) {
        SplitMix64 stream(substream_seed(seed, i));
        const double lo = model.expected[i] - d;
        double* row = matrix.values.data() + i * t_sp;
        for (std::size_t j = 0; j < t_sp; ++j)
            row[j] = lo + 2.0 * d * stream.next_unit();
    }
    return matrix;
}

std::size_t quantile_index(std::size_t t_sp, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
    // The small slack keeps exact products like 10 * 0.3 from rounding up
    // across an integer boundary.
    auto k = static_cast<std::size_t>(
        std::ceil(static_cast<double>(t_sp) * alpha - 1e-9));
    if (k < 1)
        k = 1;
    if (k > t_sp)
        throw std::out_of_range("quantile index exceeds sample count");
    return k;
}

double quantile_from_sums(std::vector<double> sums, double alpha) {
    const std::size_t k = quantile_index(sums.size(), alpha);
    std::nth_element(sums.begin(), sums.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     sums.end(), std::greater<double>());
    return sums[k - 1];
}

SampleSumVector make_sample_sums(const BitVector& selection, const SampleMatrix& matrix) {
    if (selection.size() != matrix.n)
        throw std::invalid_argument("selection length does not match sample matrix");
    SampleSumVector sums(matrix.t_sp, 0.0);
    for (std::size_t i = 0; i < matrix.n; ++i) {
        if (!selection[i])
            continue;
        const double* row = matrix.row(i);
        for (std::size_t j = 0; j < matrix.t_sp; ++j)
            sums[j] += row[j];
    }
    return sums;
}

void samplesum_apply_flips(SampleSumVector& sums, const SampleMatrix& matrix,
                           const std::vector<Flip>& flips) {
    for (const Flip& f : flips) {
        const double* row = matrix.row(static_cast<std::size_t>(f.index));
        if (f.value) {
            for (std::size_t j = 0; j < matrix.t_sp; ++j)
                sums[j] += row[j];
        } else {
            for (std::size_t j = 0; j < matrix.t_sp; ++j)
                sums[j] -= row[j];
        }
    }
}

double sampling_weight(const BitVector& selection, const SampleMatrix& matrix,
                       double alpha) {
    return quantile_from_sums(make_sample_sums(selection, matrix), alpha);
}

std::uint64_t fnv1a_doubles(const double* values, std::size_t count) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t bits;
        std::memcpy(&bits, &values[i], sizeof(bits));
        for (int byte = 0; byte < 8; ++byte) { // little-endian byte order
            hash ^= (bits >> (8 * byte)) & 0xffULL;
            hash *= 0x100000001b3ULL;
        }
    }
    return hash;
}

SampleManifest make_manifest(const WeightModel& model, const SampleMatrix& matrix) {
    SampleManifest m;
    m.kind = model.kind;
    m.n = matrix.n;
    m.d = model.dispersion;
    m.t_sp = matrix.t_sp;
    m.seed = matrix.seed;
    m.row0_checksum = fnv1a_doubles(matrix.row(0), matrix.t_sp);
    return m;
}

void write_manifest(const SampleManifest& manifest, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open manifest for writing: " + path);
    out << "version=" << manifest.version << '\n';
    out << "kind=" << (manifest.kind == WeightKind::Iid ? "iid" : "degree") << '\n';
    out << "n=" << manifest.n << '\n';
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", manifest.d);
    out << "d=" << buf << '\n';
    out << "t_sp=" << manifest.t_sp << '\n';
    out << "seed=" << manifest.seed << '\n';
    out << "generator=" << manifest.generator << '\n';
    out << "row0_checksum=" << manifest.row0_checksum << '\n';
    if (!out)
        throw std::runtime_error("I/O error while writing " + path);
}

SampleManifest read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open manifest: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("malformed manifest line: " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto need = [&kv, &path](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::runtime_error("manifest " + path + " missing key: " + key);
        return it->second;
    };
    SampleManifest m;
    m.version = std::stoi(need("version"));
    const std::string& kind = need("kind");
    if (kind == "iid")
        m.kind = WeightKind::Iid;
    else if (kind == "degree")
        m.kind = WeightKind::DegreeBased;
    else
        throw std::runtime_error("unknown weight kind in manifest: " + kind);
    m.n = std::stoull(need("n"));
    m.d = std::stod(need("d"));
    m.t_sp = std::stoull(need("t_sp"));
    m.seed = std::stoull(need("seed"));
    m.generator = need("generator");
    m.row0_checksum = std::stoull(need("row0_checksum"));
    return m;
}

namespace {

constexpr char kDumpMagic[4] = {'C', 'C', 'S', 'M'};
constexpr std::uint32_t kDumpVersion = 1;
constexpr std::size_t kDumpEntryLimit = 1000000;

void write_le64(std::ofstream& out, std::uint64_t v) {
    char bytes[8];
    for (int i = 0; i < 8; ++i)
        bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(bytes, 8);
}

std::uint64_t read_le64(std::ifstream& in) {
    unsigned char bytes[8];
    in.read(reinterpret_cast<char*>(bytes), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return v;
}

} // namespace

void write_dump(const SampleMatrix& matrix, const std::string& path) {
    if (matrix.values.size() > kDumpEntryLimit)
        throw std::invalid_argument("matrix too large for full dump (n * t_sp > 10^6)");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open dump for writing: " + path);
    out.write(kDumpMagic, 4);
    char version[4];
    for (int i = 0; i < 4; ++i)
        version[i] = static_cast<char>((kDumpVersion >> (8 * i)) & 0xff);
    out.write(version, 4);
    write_le64(out, matrix.n);
    write_le64(out, matrix.t_sp);
    write_le64(out, matrix.seed);
    for (double v : matrix.values) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        write_le64(out, bits);
    }
    if (!out)
        throw std::runtime_error("I/O error while writing " + path);
}

SampleMatrix read_dump(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open dump: " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kDumpMagic, 4) != 0)
        throw std::runtime_error("bad dump magic in " + path);
    unsigned char version[4];
    in.read(reinterpret_cast<char*>(version), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(version[i]) << (8 * i);
    if (v != kDumpVersion)
        throw std::runtime_error("unsupported dump version in " + path);
    SampleMatrix matrix;
    matrix.n = read_le64(in);
    matrix.t_sp = read_le64(in);
    matrix.seed = read_le64(in);
    if (matrix.n * matrix.t_sp > kDumpEntryLimit)
        throw std::runtime_error("dump header exceeds entry limit: " + path);
    matrix.values.resize(matrix.n * matrix.t_sp);
    for (double& value : matrix.values) {
        std::uint64_t bits = read_le64(in);
        std::memcpy(&value, &bits, sizeof(value));
    }
    if (!in)
        throw std::runtime_error("truncated dump: " + path);
    return matrix;
}

} // namespace ccmc
