#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "rtmbe/types.hpp"

namespace rtmbe {

// Trajectory files are headerless: N records of C little-endian IEEE-754
// binary64 values each, all channels of a sample contiguous, samples in time
// order.

/// Reads a file of `channels`-wide records into a flat channel-major vector.
/// Throws FileError / FormatError.
std::vector<double> read_records(const std::filesystem::path& path, std::size_t channels);
void write_records(const std::filesystem::path& path, std::span<const double> values);

template <int C>
std::vector<Vector<C>> read_vectors(const std::filesystem::path& path) {
  const auto flat = read_records(path, C);
  std::vector<Vector<C>> out(flat.size() / C);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int c = 0; c < C; ++c) out[k][c] = flat[k * C + c];
  }
  return out;
}

template <int C>
void write_vectors(const std::filesystem::path& path, std::span<const Vector<C>> records) {
  std::vector<double> flat;
  flat.reserve(records.size() * C);
  for (const auto& r : records) flat.insert(flat.end(), r.data(), r.data() + C);
  write_records(path, flat);
}

struct Trajectories {
  std::vector<InputVector> us;
  std::vector<MeasurementVector> ys;
};

/// Reads the (u, y) file pair. Throws LengthMismatch ("Data-length
/// mismatch ...") when the record counts differ.
Trajectories read_trajectories(const std::filesystem::path& u_path,
                               const std::filesystem::path& y_path);

void write_trajectories(std::span<const InputVector> us, std::span<const MeasurementVector> ys,
                        const std::filesystem::path& u_path,
                        const std::filesystem::path& y_path);

}  // namespace rtmbe
