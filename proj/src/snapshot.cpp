#include "nsch/snapshot.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace nsch {
namespace {

constexpr std::array<char, 4> kMagic{'N', 'S', 'C', 'H'};

template <class T>
void put_le(std::ostream& os, T value) {
  std::array<unsigned char, sizeof(T)> bytes{};
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  os.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <class T>
T get_le(std::istream& is) {
  std::array<unsigned char, sizeof(T)> bytes{};
  if (!is.read(reinterpret_cast<char*>(bytes.data()), sizeof(T))) {
    throw std::runtime_error("snapshot truncated");
  }
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const ScalarField& f, double t) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open snapshot for writing: " + path.string());
  const Grid& g = f.grid();
  os.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(g.nx));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(g.ny));
  put_le<double>(os, g.lx);
  put_le<double>(os, g.ly);
  put_le<double>(os, t);
  for (double v : f.values()) put_le<double>(os, v);
  if (!os) throw std::runtime_error("failed writing snapshot: " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path, Boundary bc) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open snapshot: " + path.string());
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("not an NSCH snapshot: " + path.string());
  }
  const auto nx = get_le<std::uint32_t>(is);
  const auto ny = get_le<std::uint32_t>(is);
  const double lx = get_le<double>(is);
  const double ly = get_le<double>(is);
  const double t = get_le<double>(is);
  const Grid g = Grid::make(static_cast<int>(nx), static_cast<int>(ny), lx, ly, 0.0, -0.5 * ly);
  Snapshot s{ScalarField(g, bc), t};
  for (double& v : s.field.values()) v = get_le<double>(is);
  return s;
}

}  // namespace nsch
