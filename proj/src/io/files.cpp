#include "jonq/io/files.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <vector>

#include "jonq/error.hpp"
#include "jonq/ringkit/parse.hpp"

namespace jonq {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

// non-blank lines with comments removed
std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string line(text.substr(pos, end - pos));
        ++number;
        pos = end + 1;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") != std::string::npos)
            out.push_back({number, line});
        if (end == text.size())
            break;
    }
    return out;
}

std::size_t first_column(const std::string& s)
{
    return s.find_first_not_of(" \t") + 1;
}

} // namespace

InputFile parse_input(std::string_view text, const ReadOptions& options)
{
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty())
        throw SyntaxError("empty input", 1, 1, "ring n=<N> field=<Q|GF(p)>");

    static const std::regex header_re(R"(\s*ring\s+n=(\d+)\s+field=(Q|GF\(\d+\))\s*)");
    std::smatch m;
    if (!std::regex_match(lines[0].text, m, header_re))
        throw SyntaxError("bad header", lines[0].number, first_column(lines[0].text), "ring n=<N> field=<Q|GF(p)>");
    const std::size_t n = std::stoul(m[1].str());
    if (n + 1 > kMaxVariables)
        throw SyntaxError("at most " + std::to_string(kMaxVariables) + " variables are supported", lines[0].number,
                          static_cast<std::size_t>(m.position(1)) + 1, "n < " + std::to_string(kMaxVariables));
    Field field;
    try {
        field = Field::parse(m[2].str());
    } catch (const Error& e) {
        throw SyntaxError(e.what(), lines[0].number, static_cast<std::size_t>(m.position(2)) + 1, "Q or GF(p)");
    }
    if (options.field)
        field = *options.field;
    const Ring ring(n + 1, field, options.order);

    std::size_t next = 1;
    std::optional<std::size_t> coords;
    static const std::regex map_re(R"(\s*map\s+coords=(\d+)\s*)");
    if (next < lines.size() && lines[next].text.find("map") != std::string::npos &&
        lines[next].text.find('x') == std::string::npos) {
        if (!std::regex_match(lines[next].text, m, map_re))
            throw SyntaxError("bad map line", lines[next].number, first_column(lines[next].text), "map coords=<N+1>");
        coords = std::stoul(m[1].str());
        if (*coords != n + 1)
            throw SyntaxError("a map of P^" + std::to_string(n) + " has " + std::to_string(n + 1) + " coordinates",
                              lines[next].number, static_cast<std::size_t>(m.position(1)) + 1,
                              "coords=" + std::to_string(n + 1));
        ++next;
    }

    std::vector<Polynomial> polys;
    for (; next < lines.size(); ++next)
        polys.push_back(parse_polynomial(lines[next].text, ring, lines[next].number));

    InputFile out{ring, std::nullopt, Ideal(ring, polys)};
    if (coords) {
        if (polys.size() != *coords) {
            const std::size_t line = lines.back().number + 1;
            throw SyntaxError("expected " + std::to_string(*coords) + " coordinates, found " +
                                  std::to_string(polys.size()),
                              line, 1, std::to_string(*coords) + " polynomial lines");
        }
        out.map = make_map(std::move(polys));
    }
    return out;
}

InputFile read_input(const std::string& path, const ReadOptions& options)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(Errc::InvalidArgument, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_input(buffer.str(), options);
}

namespace {

std::string header(const Ring& ring)
{
    return "ring n=" + std::to_string(ring.nvars() - 1) + " field=" + ring.field().name() + "\n";
}

} // namespace

std::string format_ideal(const Ideal& I)
{
    std::string out = header(I.ring());
    for (const auto& g : I.generators())
        out += g.to_string() + "\n";
    return out;
}

std::string format_map(const RationalMap& F)
{
    std::string out = header(F.ring()) + "map coords=" + std::to_string(F.coords().size()) + "\n";
    for (const auto& c : F.coords())
        out += c.to_string() + "\n";
    return out;
}

} // namespace jonq
