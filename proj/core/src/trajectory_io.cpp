#include "rtmbe/trajectory_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "rtmbe/errors.hpp"

namespace rtmbe {
namespace {

constexpr std::size_t kValueBytes = sizeof(double);
static_assert(kValueBytes == 8 && std::numeric_limits<double>::is_iec559);

double decode_le(const unsigned char* b) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < kValueBytes; ++i) bits |= std::uint64_t{b[i]} << (8 * i);
  return std::bit_cast<double>(bits);
}

void encode_le(double v, unsigned char* b) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (std::size_t i = 0; i < kValueBytes; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
}

}  // namespace

std::vector<double> read_records(const std::filesystem::path& path, std::size_t channels) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path.string());

  std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in), {}};
  if (in.bad()) throw FileError("error reading " + path.string());

  const std::size_t record_bytes = channels * kValueBytes;
  if (bytes.size() % record_bytes != 0) {
    throw FormatError(path.string() + ": size " + std::to_string(bytes.size()) +
                      " bytes is not a multiple of the " + std::to_string(record_bytes) +
                      "-byte record size");
  }
  std::vector<double> values(bytes.size() / kValueBytes);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = decode_le(&bytes[i * kValueBytes]);
  return values;
}

void write_records(const std::filesystem::path& path, std::span<const double> values) {
  std::vector<unsigned char> bytes(values.size() * kValueBytes);
  for (std::size_t i = 0; i < values.size(); ++i) encode_le(values[i], &bytes[i * kValueBytes]);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FileError("error writing " + path.string());
}

Trajectories read_trajectories(const std::filesystem::path& u_path,
                               const std::filesystem::path& y_path) {
  Trajectories t;
  t.ys = read_vectors<kMeasurementDim>(y_path);
  t.us = read_vectors<kInputDim>(u_path);
  if (t.us.size() != t.ys.size()) {
    throw LengthMismatch("Data-length mismatch: " + std::to_string(t.us.size()) +
                         " input records vs " + std::to_string(t.ys.size()) +
                         " measurement records");
  }
  return t;
}

void write_trajectories(std::span<const InputVector> us, std::span<const MeasurementVector> ys,
                        const std::filesystem::path& u_path,
                        const std::filesystem::path& y_path) {
  if (us.size() != ys.size()) {
    throw LengthMismatch("Data-length mismatch: " + std::to_string(us.size()) +
                         " inputs vs " + std::to_string(ys.size()) + " measurements");
  }
  write_vectors<kInputDim>(u_path, us);
  write_vectors<kMeasurementDim>(y_path, ys);
}

}  // namespace rtmbe
