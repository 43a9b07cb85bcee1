#include "flataffine/reproduction.hpp"

#include <cstdio>

// Runs every reproduction criterion and prints one verdict line each.
// Exit status 0 iff all pass.
int main()
{
    const auto results = flataffine::run_all_criteria();
    bool all_ok = true;
    for (const auto& r : results) {
        std::printf("criterion %2d %s %-58s (%.2f s)\n", r.index,
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
        for (const auto& n : r.notes)
            std::printf("              - %s\n", n.c_str());
        all_ok = all_ok && r.pass;
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria pass"
                               : "acceptance: FAILURES present");
    return all_ok ? 0 : 1;
}
