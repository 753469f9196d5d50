#ifndef WISHART_POLSAR_IO_HPP
#define WISHART_POLSAR_IO_HPP

#include "wishart/hermitian.hpp"
#include "wishart/rng.hpp"

#include <cstdint>
#include <filesystem>
#include <variant>
#include <vector>

namespace wishart {

/// Image of covariance pixels, row-major.
struct CovarianceStack {
  int m = 0;
  int rows = 0;
  int cols = 0;
  std::vector<HermitianMatrix> pixels;

  const HermitianMatrix& at(int row, int col) const;
};

/// Inclusive 0-based pixel rectangle; x indexes columns, y indexes rows.
struct RectRegion {
  int x0, y0, x1, y1;
};

/// Byte-per-pixel selection grid; nonzero selects.
struct MaskRegion {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> select;
};

using RegionSpec = std::variant<RectRegion, MaskRegion>;

// PCSK binary covariance stacks: 16-byte header ("PCSK", version u16, m u16,
// rows u32, cols u32, little-endian), then per pixel the m real diagonal
// entries followed by the row-major upper triangle as (re, im) f64 pairs.
void write_stack(const CovarianceStack& stack, const std::filesystem::path& path);
CovarianceStack read_stack(const std::filesystem::path& path);

/// Plain-text interchange for hand-made fixtures: a "m,rows,cols" header
/// line, then one pixel per line in the PCSK field order.
CovarianceStack read_stack_csv(const std::filesystem::path& path);

// PMSK masks: 16-byte header ("PMSK", version u16, reserved u16, rows u32,
// cols u32), then rows*cols bytes.
void write_mask(const MaskRegion& mask, const std::filesystem::path& path);
MaskRegion read_mask(const std::filesystem::path& path);

/// Selected pixels in row-major order; errors on out-of-bounds rectangles
/// and on empty selections.
SampleSet extract_region(const CovarianceStack& stack, const RegionSpec& spec);

/// n distinct items, deterministic given the stream.
SampleSet subsample_without_replacement(const SampleSet& sample, long n,
                                        RngStream& stream);

} // namespace wishart

#endif
