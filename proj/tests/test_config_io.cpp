#include "mcac/config.hpp"

#include "mcac/errors.hpp"
#include "mcac/snapshot.hpp"
#include "test_support.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>
#include <string>

using namespace mcac;

namespace {

std::string read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

int main() {
    using testing::check_close;

    const std::string base =
        "# sample experiment\n"
        "grid.nx = 64\n"
        "grid.ny = 64\n"
        "grid.Lx = 2.0\n"
        "grid.Ly = 2.0\n"
        "eps = 0.03\n"
        "dt = auto\n"
        "tmax = 0.01\n"
        "multiplier = bb\n"
        "initial = circle\n"
        "initial.cx = 1.0\n"
        "initial.cy = 1.0\n"
        "initial.r = 0.3\n"
        "approx_order = 2\n"
        "record_stride = 10\n"
        "snapshot_stride = 0\n"
        "output_dir = out_test\n"
        "fronttrack.npoints = 256\n"
        "fronttrack.dt = auto\n"
        "fronttrack.projection = on\n";

    // happy path
    {
        const SimConfig cfg = parse_config_text(base);
        CHECK(cfg.grid.nx == 64 && cfg.grid.ny == 64, "grid parsed");
        check_close("auto dt", cfg.dt_effective(), 0.1 * 0.03 * 0.03, 1e-18);
        CHECK(cfg.multiplier == MultiplierKind::BB, "multiplier parsed");
        CHECK(cfg.initial == InitialKind::Circle, "initial parsed");
        CHECK(cfg.ft_projection, "projection parsed");
    }

    // unknown key named in the error
    {
        bool named = false;
        try {
            parse_config_text(base + "grid.nz = 3\n");
        } catch (const ConfigError& e) {
            named = std::string(e.what()).find("grid.nz") != std::string::npos;
        }
        CHECK(named, "unknown key rejected by name");
    }

    // dt cap and clearance checks
    CHECK_THROWS(parse_config_text(base + "dt = 0.0002\n"), ConfigError, "dt > 0.2 eps^2");
    CHECK_THROWS(parse_config_text(base + "initial.r = 0.9\n"), ConfigError,
                 "interface too close to the boundary");
    CHECK_THROWS(parse_config_text(base + "eps = 0.2\n"), ConfigError,
                 "cutoff support exceeds clearance");
    CHECK_THROWS(parse_config_text("multiplier = maybe\n"), ConfigError, "bad multiplier");
    CHECK_THROWS(parse_config_text("grid.nx = tiny\n"), ConfigError, "non-integer value");

    // ellipse reach uses max(a, b)
    {
        std::string ell = base;
        ell += "initial = ellipse\ninitial.a = 0.35\ninitial.b = 0.25\n";
        const SimConfig cfg = parse_config_text(ell);
        CHECK(cfg.initial == InitialKind::Ellipse, "ellipse accepted");
        CHECK_THROWS(parse_config_text(ell + "initial.a = 0.8\n"), ConfigError,
                     "ellipse reach rejected");
    }

    // PFS1 round trip: bit-exact including awkward values
    {
        GridSpec spec{37, 23, 1.25, 0.75};
        Field u(spec);
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (double& x : u.v) x = dist(rng);
        u.v[0] = 0.0;
        u.v[1] = -0.0;
        u.v[2] = 1e-308;            // subnormal-adjacent
        u.v[3] = 0.1 + 0.2;         // not exactly 0.3
        u.v[4] = -1.0 + 1e-16;

        write_pfs1("rt.pfs1", u, 0.12345678901234567, 0.03);
        const Snapshot snap = read_pfs1("rt.pfs1");
        CHECK(snap.field.spec == spec, "grid spec round trip");
        CHECK(snap.time == 0.12345678901234567, "time round trip");
        CHECK(snap.eps == 0.03, "eps round trip");
        bool bits_ok = snap.field.v.size() == u.v.size();
        for (size_t k = 0; bits_ok && k < u.v.size(); ++k) {
            std::uint64_t a, b;
            std::memcpy(&a, &u.v[k], 8);
            std::memcpy(&b, &snap.field.v[k], 8);
            if (a != b) bits_ok = false;
        }
        CHECK(bits_ok, "payload bit-exact");

        write_pfs1("rt2.pfs1", snap.field, snap.time, snap.eps);
        CHECK(read_bytes("rt.pfs1") == read_bytes("rt2.pfs1"), "file bytes identical");
        std::remove("rt.pfs1");
        std::remove("rt2.pfs1");
    }

    // malformed snapshots rejected
    {
        std::ofstream bad("bad.pfs1", std::ios::binary);
        bad << "NOPE\n1 1 1 1 0 0\n";
        bad.close();
        CHECK_THROWS(read_pfs1("bad.pfs1"), ConfigError, "bad magic");
        std::remove("bad.pfs1");

        std::ofstream trunc("trunc.pfs1", std::ios::binary);
        trunc << "PFS1\n8 8 1 1 0 0.1\nshort";
        trunc.close();
        CHECK_THROWS(read_pfs1("trunc.pfs1"), ConfigError, "truncated payload");
        std::remove("trunc.pfs1");
    }

    return testing::finish("test_config_io");
}
