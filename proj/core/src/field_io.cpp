#include "hartree/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "hartree/error.hpp"

namespace hartree {
namespace {

constexpr char kMagic[4] = {'H', 'W', 'F', '1'};

template <class T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  static_assert(sizeof(T) == 4 || sizeof(T) == 8);
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  U bits = std::bit_cast<U>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

template <class T>
T get_le(std::span<const std::uint8_t> in, std::size_t offset) {
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  U bits = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<U>(in[offset + i]) << (8 * i);
  return std::bit_cast<T>(bits);
}

}  // namespace

std::size_t encoded_size(const Grid& grid) noexcept {
  const auto d = static_cast<std::size_t>(grid.dim());
  return 4 + 4 + 4 * d + 8 * d + 16 * grid.size();
}

std::vector<std::uint8_t> encode_field(const Field& u) {
  const Grid& g = u.grid();
  std::vector<std::uint8_t> out;
  out.reserve(encoded_size(g));
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_le(out, static_cast<std::uint32_t>(g.dim()));
  for (int a = 0; a < g.dim(); ++a) put_le(out, static_cast<std::uint32_t>(g.n()));
  for (int a = 0; a < g.dim(); ++a) put_le(out, g.length());
  for (complex z : u.values()) {
    put_le(out, z.real());
    put_le(out, z.imag());
  }
  return out;
}

Field decode_field(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8) {
    throw FormatError("HWF1: truncated header: expected at least 8 bytes, got " +
                      std::to_string(bytes.size()));
  }
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw FormatError("HWF1: bad magic");
  const auto dim = get_le<std::uint32_t>(bytes, 4);
  if (dim < 1 || dim > kMaxDim) throw FormatError("HWF1: unsupported dimension " + std::to_string(dim));

  const std::size_t header = 8 + 12 * dim;
  if (bytes.size() < header) {
    throw FormatError("HWF1: truncated header: expected " + std::to_string(header) +
                      " bytes, got " + std::to_string(bytes.size()));
  }
  const auto n = get_le<std::uint32_t>(bytes, 8);
  const auto length = get_le<double>(bytes, 8 + 4 * dim);
  for (std::uint32_t a = 1; a < dim; ++a) {
    if (get_le<std::uint32_t>(bytes, 8 + 4 * a) != n ||
        get_le<double>(bytes, 8 + 4 * dim + 8 * a) != length)
      throw FormatError("HWF1: only cubic grids are supported");
  }

  Grid grid = [&] {
    try {
      return Grid(static_cast<int>(dim), n, length);
    } catch (const DomainError& e) {
      throw FormatError(std::string("HWF1: invalid grid header: ") + e.what());
    }
  }();

  const std::size_t expected = encoded_size(grid);
  if (bytes.size() != expected) {
    throw FormatError("HWF1: truncated payload: expected " + std::to_string(expected) +
                      " bytes, got " + std::to_string(bytes.size()));
  }
  std::vector<complex> values(grid.size());
  std::size_t offset = header;
  for (auto& z : values) {
    z = complex(get_le<double>(bytes, offset), get_le<double>(bytes, offset + 8));
    offset += 16;
  }
  return Field(grid, std::move(values));
}

void write_field(const Field& u, const std::filesystem::path& path) {
  auto bytes = encode_field(u);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

Field read_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for " + path.string());
  return decode_field(bytes);
}

Field read_field(const std::filesystem::path& path, const Grid& expected) {
  Field u = read_field(path);
  require_same_grid(u.grid(), expected, ("reading " + path.string()).c_str());
  return u;
}

}  // namespace hartree
