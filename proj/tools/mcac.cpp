#include "mcac/config.hpp"
#include "mcac/errors.hpp"
#include "mcac/experiments.hpp"

#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int usage() {
    std::cerr << "usage: mcac <command> [args]\n"
                 "  profile-constants                 check the 1D profile constants\n"
                 "  simulate <config>                 run one simulation\n"
                 "  converge <config> --eps <list>    convergence study (comma-separated eps)\n"
                 "  compare-multipliers <config>      bb vs rs volume drift\n"
                 "  equilibrium <config>              circle equilibrium report\n"
                 "exit codes: 0 pass, 1 assertion failure, 2 usage/config error\n";
    return 2;
}

std::vector<double> parse_eps_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage();
    const std::string cmd = argv[1];

    try {
        if (cmd == "profile-constants") {
            return mcac::cmd_profile_constants(std::cout).pass ? 0 : 1;
        }
        if (cmd == "simulate") {
            if (argc < 3) return usage();
            return mcac::cmd_simulate(mcac::load_config(argv[2]), std::cout);
        }
        if (cmd == "converge") {
            if (argc < 5 || std::strcmp(argv[3], "--eps") != 0) return usage();
            const std::vector<double> eps = parse_eps_list(argv[4]);
            return mcac::cmd_converge(mcac::load_config(argv[2]), eps, std::cout).pass ? 0 : 1;
        }
        if (cmd == "compare-multipliers") {
            if (argc < 3) return usage();
            return mcac::cmd_compare_multipliers(mcac::load_config(argv[2]), std::cout).pass ? 0
                                                                                             : 1;
        }
        if (cmd == "equilibrium") {
            if (argc < 3) return usage();
            return mcac::cmd_equilibrium(mcac::load_config(argv[2]), std::cout).pass ? 0 : 1;
        }
        return usage();
    } catch (const mcac::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
