#include "passhom/surface.hpp"

#include <charconv>

#include "passhom/error.hpp"

namespace passhom {

void validate_signature(const SurfaceSignature& sig) {
  if (sig.genus < 0)
    throw Error(ErrorCode::DimensionMismatch, "genus must be non-negative");
  if (sig.boundary_count < 1)
    throw Error(ErrorCode::DimensionMismatch, "surface must have at least one boundary component");
  if (2 * sig.genus + sig.boundary_count - 1 > kMaxRank)
    throw Error(ErrorCode::DimensionMismatch,
                "homology rank exceeds supported maximum of " + std::to_string(kMaxRank));
}

SurfaceSignature make_signature(Int genus, Int boundary_count) {
  SurfaceSignature sig{genus, boundary_count};
  validate_signature(sig);
  return sig;
}

bool looks_like_band_name(std::string_view name) noexcept {
  if (name.size() < 2) return false;
  if (name[0] != 'a' && name[0] != 'b' && name[0] != 'c') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return false;
  return true;
}

Index band_index(const SurfaceSignature& sig, std::string_view name) {
  validate_signature(sig);
  if (!looks_like_band_name(name))
    throw Error(ErrorCode::UnknownBandName, "'" + std::string(name) + "' is not a band name");
  Int number = 0;
  const auto digits = name.substr(1);
  const auto result = std::from_chars(digits.data(), digits.data() + digits.size(), number);
  if (result.ec != std::errc{} || result.ptr != digits.data() + digits.size() || number < 1)
    throw Error(ErrorCode::UnknownBandName, "'" + std::string(name) + "' is not a band name");

  const char kind = name[0];
  if (kind == 'a' || kind == 'b') {
    if (number > sig.genus)
      throw Error(ErrorCode::UnknownBandName, "band '" + std::string(name) + "' does not exist at genus " +
                                                  std::to_string(sig.genus));
    return static_cast<Index>(2 * (number - 1) + (kind == 'b' ? 1 : 0));
  }
  if (number > sig.boundary_count - 1)
    throw Error(ErrorCode::UnknownBandName, "band '" + std::string(name) + "' does not exist with " +
                                                std::to_string(sig.boundary_count) + " boundary components");
  return static_cast<Index>(2 * sig.genus + number - 1);
}

std::string band_name(const SurfaceSignature& sig, Index index) {
  validate_signature(sig);
  if (index < 0 || index >= sig.rank())
    throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(index) + " out of range");
  if (index < 2 * sig.genus) {
    const Int pair = index / 2 + 1;
    return (index % 2 == 0 ? "a" : "b") + std::to_string(pair);
  }
  return "c" + std::to_string(index - 2 * sig.genus + 1);
}

}  // namespace passhom
