// Runs every acceptance check and prints one line per check.

#include "stmod/verify.hpp"

#include <cstdio>

int main()
{
    const stmod::VerifyOptions opts;
    std::size_t failed = 0, index = 0;
    for (const auto& id : stmod::verify_ids()) {
        ++index;
        bool passed = false;
        std::string note;
        try {
            const auto r = stmod::run_check(id, opts);
            passed = r.passed;
            note = r.title;
            if (!passed)
                note += "\n    " + r.details.dump();
        } catch (const std::exception& e) {
            note = std::string("error: ") + e.what();
        }
        failed += !passed;
        std::printf("%s  %2zu  %-20s %s\n", passed ? "PASS" : "FAIL", index, id.c_str(), note.c_str());
    }
    std::printf("%zu of %zu checks passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
