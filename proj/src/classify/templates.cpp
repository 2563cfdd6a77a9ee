#include "jonq/classify/templates.hpp"

namespace jonq {

namespace {

long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

BettiTable with_origin(std::initializer_list<std::pair<std::pair<int, int>, int>> entries)
{
    BettiTable b{{{0, 0}, 1}};
    for (const auto& [key, n] : entries)
        b[key] += n;
    return b;
}

int total(const BettiTable& b, int i)
{
    int sum = 0;
    for (const auto& [key, n] : b)
        if (key.first == i)
            sum += n;
    return sum;
}

int max_index(const BettiTable& b)
{
    int out = 0;
    for (const auto& [key, n] : b)
        if (n > 0)
            out = std::max(out, key.first);
    return out;
}

} // namespace

BettiTable main_theorem_table(int d)
{
    return with_origin({{{1, d}, 4}, {{2, d + 1}, 3}, {{2, 2 * d - 1}, 1}, {{3, d + 2}, 1}});
}

BettiTable almost_koszul_table(int n, int e)
{
    BettiTable b = with_origin({{{1, 1 + e}, n + 1}, {{2, 2 + e}, static_cast<int>(binomial(n, 2))}, {{2, 1 + 2 * e}, 1}});
    for (int i = 3; i <= n; ++i)
        b[{i, i + e}] += static_cast<int>(binomial(n, i));
    return b;
}

BettiTable near_noether_table(int d)
{
    return with_origin({{{1, d}, 4}, {{2, d + 1}, 3}, {{2, 2 * d}, 1}, {{3, d + 3}, 1}});
}

std::string_view kind_name(TemplateKind kind)
{
    switch (kind) {
    case TemplateKind::MainTheorem:
        return "MainTheorem";
    case TemplateKind::AlmostKoszul:
        return "AlmostKoszul";
    case TemplateKind::HilbertBurchQF:
        return "HilbertBurchQF";
    case TemplateKind::NearNoether:
        return "NearNoether";
    case TemplateKind::NoMatch:
        break;
    }
    return "NoMatch";
}

std::string TemplateMatch::to_string() const
{
    switch (kind) {
    case TemplateKind::MainTheorem:
        return "MainTheorem(" + std::to_string(d) + ")";
    case TemplateKind::AlmostKoszul:
        return "AlmostKoszul(" + std::to_string(n) + "," + std::to_string(d) + ")";
    case TemplateKind::HilbertBurchQF:
        return "HilbertBurchQF";
    case TemplateKind::NearNoether:
        return "NearNoether(" + std::to_string(d) + ")";
    case TemplateKind::NoMatch:
        break;
    }
    return "NoMatch";
}

TemplateMatch match_template(const BettiTable& b, int n)
{
    TemplateMatch out{TemplateKind::NoMatch, 0, n, b};
    BettiTable clean;
    for (const auto& [key, count] : b)
        if (count != 0)
            clean[key] = count;

    int first = -1;
    for (const auto& [key, count] : clean)
        if (key.first == 1) {
            if (first >= 0)
                return out;
            first = key.second;
        }
    if (first < 1)
        return out;

    if (n == 3 && first >= 2 && clean == main_theorem_table(first)) {
        out.kind = TemplateKind::MainTheorem;
        out.d = first;
    } else if (n >= 2 && first >= 2 && clean == almost_koszul_table(n, first - 1)) {
        out.kind = TemplateKind::AlmostKoszul;
        out.d = first - 1;
    } else if (max_index(clean) == 2 && total(clean, 1) == total(clean, 2) + 1) {
        out.kind = TemplateKind::HilbertBurchQF;
    } else if (clean == near_noether_table(first)) {
        out.kind = TemplateKind::NearNoether;
        out.d = first;
    }
    return out;
}

} // namespace jonq
