// One line per acceptance criterion; exit status 0 iff all of them pass.
#include <cstdio>

#include "jonq/suite/suite.hpp"

int main()
{
    const jonq::SuiteOptions options;
    const auto results = jonq::run_suite(options, [](const jonq::CheckResult& r) {
        std::printf("criterion %2d %-28s %-6s %8.3fs  %s (%s)\n", r.id, r.name.c_str(),
                    r.status == jonq::CheckStatus::Pass ? "PASS" : "FAIL", r.seconds, r.claim.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
    });
    int passed = 0;
    for (const auto& r : results)
        passed += r.status == jonq::CheckStatus::Pass;
    std::printf("%d/%zu criteria passed\n", passed, results.size());
    return passed == static_cast<int>(results.size()) && results.size() == jonq::kCheckCount ? 0 : 1;
}
