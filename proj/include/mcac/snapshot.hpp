#pragma once

#include "mcac/grid.hpp"

#include <string>

namespace mcac {

struct Snapshot {
    Field field;
    double time = 0.0;
    double eps = 0.0;
};

// PFS1 format: "PFS1\n", one ASCII header line "nx ny Lx Ly time eps\n",
// then nx*ny little-endian IEEE-754 doubles, row-major. Round-trips bit-exact.
void write_pfs1(const std::string& path, const Field& u, double time, double eps);
Snapshot read_pfs1(const std::string& path);

} // namespace mcac
