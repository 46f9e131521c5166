#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>

namespace passhom {

using Int = std::int64_t;
using Index = Eigen::Index;

template <typename ScalarT>
using DenseMatrix = Eigen::Matrix<ScalarT, Eigen::Dynamic, Eigen::Dynamic>;
template <typename ScalarT>
using DenseVector = Eigen::Matrix<ScalarT, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;

// A homology class is an integer coefficient vector in the spine basis.
using HomologyClass = IntVector;

// Hard cap on the homology rank so that parsing hostile input stays
// allocation-safe.
inline constexpr Index kMaxRank = 4096;

// Genus and boundary count of a compact oriented surface with boundary.
// First homology has rank n = 2g + k - 1; only the disk (g=0, k=1) has n = 0.
struct SurfaceSignature {
  Int genus = 0;
  Int boundary_count = 1;

  Index rank() const noexcept { return static_cast<Index>(2 * genus + boundary_count - 1); }

  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

void validate_signature(const SurfaceSignature& sig);
SurfaceSignature make_signature(Int genus, Int boundary_count);

// Spine basis order: a_1, b_1, ..., a_g, b_g, c_1, ..., c_{k-1}.
// Band names a1..ag, b1..bg, c1..c(k-1) address the basis elements.
Index band_index(const SurfaceSignature& sig, std::string_view name);
std::string band_name(const SurfaceSignature& sig, Index index);

// Lexical check only: a/b/c followed by decimal digits.
bool looks_like_band_name(std::string_view name) noexcept;

}  // namespace passhom
