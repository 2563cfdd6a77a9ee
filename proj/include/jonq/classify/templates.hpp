#pragma once

#include <string>
#include <string_view>

#include "jonq/resolve/resolution.hpp"

namespace jonq {

enum class TemplateKind {
    MainTheorem,
    AlmostKoszul,
    HilbertBurchQF,
    NearNoether,
    NoMatch,
};

std::string_view kind_name(TemplateKind kind);

/// Result of matching a Betti table against the known resolution shapes.
/// `d` is the generator degree for MainTheorem and NearNoether, deg q for
/// AlmostKoszul; `n` is the number of variables minus one.
struct TemplateMatch {
    TemplateKind kind = TemplateKind::NoMatch;
    int d = 0;
    int n = 0;
    BettiTable witness;

    std::string to_string() const;
};

/// Shapes over n+1 variables, tried in this order:
///   MainTheorem(d), n = 3: (1,d):4 (2,d+1):3 (2,2d-1):1 (3,d+2):1
///   AlmostKoszul(n, e):    (1,1+e):n+1 (2,2+e):C(n,2) (2,1+2e):1 (i,i+e):C(n,i), 3 <= i <= n
///   HilbertBurchQF:        length two, rank F1 = rank F2 + 1
///   NearNoether(d):        (1,d):4 (2,d+1):3 (2,2d):1 (3,d+3):1
/// Coinciding positions add up.
TemplateMatch match_template(const BettiTable& b, int n);

BettiTable main_theorem_table(int d);
BettiTable almost_koszul_table(int n, int e);
BettiTable near_noether_table(int d);

} // namespace jonq
