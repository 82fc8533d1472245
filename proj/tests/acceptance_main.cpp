#include "acceptance_suite.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"acceptance battery over the bundled scenes"};
    std::string scenes = "scenes";
    std::string out;
    app.add_option("--scenes", scenes, "directory holding the bundled scene files");
    app.add_option("--out", out, "write the aggregate report to this path");
    CLI11_PARSE(app, argc, argv);

    const auto outcome = goodman::runAcceptanceSuite(scenes, std::cout);
    if (!out.empty()) {
        std::ofstream file(out, std::ios::binary);
        file << outcome.report.dump(2) << "\n";
    }
    std::cout << (outcome.all_passed ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return outcome.all_passed ? 0 : 1;
}
