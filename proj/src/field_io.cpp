#include "eikonal/field_io.hpp"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace eikonal {

namespace {

[[noreturn]] void io_fail(const std::string& what, const std::string& path) {
  throw std::runtime_error(what + ": " + path);
}

}  // namespace

void dump_field(const ValueField& values, double h, const std::string& path,
                DumpFormat format) {
  std::ofstream out(path, format == DumpFormat::Raw
                              ? std::ios::binary | std::ios::out
                              : std::ios::out);
  if (!out) io_fail("cannot open for writing", path);

  if (format == DumpFormat::Ascii) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d %d %.17g\n", values.m, values.n, h);
    out << buf;
    for (int j = 0; j < values.n; ++j) {
      for (int i = 0; i < values.m; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", values.at(i, j));
        out << buf << (i + 1 < values.m ? " " : "\n");
      }
    }
  } else {
    int64_t header[2] = {values.m, values.n};
    out.write(reinterpret_cast<const char*>(header), sizeof header);
    out.write(reinterpret_cast<const char*>(values.values.data()),
              static_cast<std::streamsize>(values.values.size() *
                                           sizeof(double)));
  }
  if (!out) io_fail("write failed", path);
}

LoadedField load_field(const std::string& path, DumpFormat format) {
  LoadedField lf;
  if (format == DumpFormat::Ascii) {
    std::ifstream in(path);
    if (!in) io_fail("cannot open for reading", path);
    int m = 0, n = 0;
    double h = 0.0;
    if (!(in >> m >> n >> h)) io_fail("bad ascii header", path);
    lf.values = ValueField(m, n);
    lf.h = h;
    std::string token;  // strtod semantics so "inf" round-trips
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < m; ++i) {
        if (!(in >> token)) io_fail("truncated ascii dump", path);
        lf.values.at(i, j) = std::strtod(token.c_str(), nullptr);
      }
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) io_fail("cannot open for reading", path);
    int64_t header[2];
    if (!in.read(reinterpret_cast<char*>(header), sizeof header))
      io_fail("bad raw header", path);
    lf.values = ValueField(static_cast<int>(header[0]),
                           static_cast<int>(header[1]));
    if (!in.read(reinterpret_cast<char*>(lf.values.values.data()),
                 static_cast<std::streamsize>(lf.values.values.size() *
                                              sizeof(double))))
      io_fail("truncated raw dump", path);
  }
  return lf;
}

}  // namespace eikonal
