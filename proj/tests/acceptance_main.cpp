// Runs every verification criterion and prints one PASS/FAIL line each.
// Exits nonzero if any criterion fails.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "corona/verify.hpp"

int main() {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (const char* env = std::getenv("CORONA_THREADS"); env && *env)
        threads = std::max(1, std::atoi(env));

    bool all_pass = true;
    for (const corona::verify::CriterionResult& r : corona::verify::run_all(threads)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.name
                  << ": " << r.detail << std::endl;
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << std::endl;
    return all_pass ? 0 : 1;
}
