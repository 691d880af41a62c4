#pragma once

#include <string>

#include "eikonal/grid.hpp"

namespace eikonal {

enum class DumpFormat { Ascii, Raw };

/// ascii: header "m n h", then n rows (j ascending) of m space-separated
/// values at 17 significant digits.
/// raw: two little-endian int64 (m, n), then m*n little-endian float64,
/// row-major (j rows ascending).
void dump_field(const ValueField& values, double h, const std::string& path,
                DumpFormat format);

/// Inverse of dump_field; bit-exact for raw, value-exact for ascii.
struct LoadedField {
  ValueField values;
  double h = 0.0;  // only present in ascii dumps
};
LoadedField load_field(const std::string& path, DumpFormat format);

}  // namespace eikonal
