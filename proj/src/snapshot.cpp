#include "mcac/snapshot.hpp"

#include "mcac/errors.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace mcac {

static_assert(std::endian::native == std::endian::little,
              "PFS1 writer assumes a little-endian host");

namespace {
std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}
} // namespace

void write_pfs1(const std::string& path, const Field& u, double time, double eps) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("write_pfs1: cannot open " + path);
    out << "PFS1\n";
    out << u.spec.nx << ' ' << u.spec.ny << ' ' << fmt17(u.spec.Lx) << ' ' << fmt17(u.spec.Ly)
        << ' ' << fmt17(time) << ' ' << fmt17(eps) << '\n';
    out.write(reinterpret_cast<const char*>(u.v.data()),
              static_cast<std::streamsize>(u.v.size() * sizeof(double)));
    if (!out) throw ConfigError("write_pfs1: short write to " + path);
}

Snapshot read_pfs1(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("read_pfs1: cannot open " + path);
    std::string magic;
    std::getline(in, magic);
    if (magic != "PFS1") throw ConfigError("read_pfs1: bad magic in " + path);
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    Snapshot snap;
    GridSpec spec;
    if (!(hs >> spec.nx >> spec.ny >> spec.Lx >> spec.Ly >> snap.time >> snap.eps))
        throw ConfigError("read_pfs1: bad header in " + path);
    if (spec.nx < 1 || spec.ny < 1 || spec.count() > kMaxCells)
        throw ConfigError("read_pfs1: implausible grid in " + path);
    snap.field = Field(spec);
    in.read(reinterpret_cast<char*>(snap.field.v.data()),
            static_cast<std::streamsize>(snap.field.v.size() * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(snap.field.v.size() * sizeof(double)))
        throw ConfigError("read_pfs1: truncated payload in " + path);
    return snap;
}

} // namespace mcac
