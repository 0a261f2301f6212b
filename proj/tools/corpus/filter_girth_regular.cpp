// Copies the girth-regular graphs among graph6 lines on stdin to stdout.
// Uses the test oracle only, so fixtures do not depend on the library.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "oracle/oracle.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Filter graph6 lines down to girth-regular graphs"};
    int max_girth = 0;
    app.add_option("--max-girth", max_girth, "Also drop graphs with girth above this (0: keep all)");
    CLI11_PARSE(app, argc, argv);

    std::string line;
    std::size_t read = 0;
    std::size_t kept = 0;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        ++read;
        const oracle::Graph g = oracle::decode_graph6(line);
        const oracle::GirthCycles gc = oracle::girth_cycles(g);
        if (gc.girth == 0 || (max_girth > 0 && gc.girth > max_girth)) continue;
        if (!oracle::girth_regular(g, gc)) continue;
        std::cout << line << '\n';
        ++kept;
    }
    std::cerr << "read " << read << ", kept " << kept << '\n';
    return 0;
}
