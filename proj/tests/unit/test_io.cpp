#include <doctest.h>

#include "jonq/error.hpp"
#include "jonq/io/files.hpp"
#include "jonq/ringkit/parse.hpp"
#include "jonq/ringkit/random.hpp"

using namespace jonq;

namespace {

void expect_syntax(const char* text, std::size_t line, std::size_t column)
{
    try {
        parse_input(text);
        FAIL("expected a SyntaxError for: " << text);
    } catch (const SyntaxError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
    }
}

} // namespace

TEST_CASE("ideal files")
{
    const InputFile in = parse_input("# Noether\n\nring n=3 field=Q\nx0*x3   # first\nx1*x3\n  x0*x1 - x0*x2\nx0*x1 - x1^2\n");
    CHECK(in.ring.nvars() == 4);
    CHECK(in.ring.field() == Field::rationals());
    CHECK_FALSE(in.map);
    REQUIRE(in.ideal.size() == 4);
    CHECK(in.ideal[2] == parse_polynomial("x0*x1 - x0*x2", in.ring));

    const InputFile gf = parse_input("ring n=2 field=GF(7)\n3/2*x0 + x1\n");
    CHECK(gf.ring.field() == Field::prime(7));
    CHECK(gf.ideal[0] == parse_polynomial("5*x0 + x1", gf.ring));

    ReadOptions opt;
    opt.field = Field::prime(kDefaultPrime);
    opt.order = TermOrder::lex();
    const InputFile over = parse_input("ring n=1 field=Q\nx0^2 - 1/2*x1^2\n", opt);
    CHECK(over.ring.field() == Field::prime(kDefaultPrime));
    CHECK(over.ring.order() == TermOrder::lex());
}

TEST_CASE("map files")
{
    const InputFile in = parse_input("ring n=2 field=Q\nmap coords=3\n2*x1*x2\n2*x0*x2\n2*x0*x1\n");
    REQUIRE(in.map);
    CHECK(in.map->to_string() == "(x1*x2 : x0*x2 : x0*x1)");
    CHECK(in.ideal.size() == 3);
}

TEST_CASE("file errors")
{
    expect_syntax("", 1, 1);
    expect_syntax("# only a comment\n", 1, 1);
    expect_syntax("ring n=3\nx0\n", 1, 1);
    expect_syntax("ring n=3 field=R\nx0\n", 1, 1);
    expect_syntax("ring n=3 field=Q\nx0 +\n", 2, 5);
    expect_syntax("ring n=20 field=Q\nx0\n", 1, 8);
    expect_syntax("ring n=2 field=Q\nmap coords=4\nx0\nx1\nx2\nx0\n", 2, 12);
    expect_syntax("ring n=2 field=Q\nmap coords=3\nx0\nx1\n", 5, 1);
    expect_syntax("ring n=2 field=Q\nmap cords=3\nx0\nx1\nx2\n", 2, 1);

    CHECK_THROWS_AS(parse_input("ring n=2 field=GF(4)\nx0\n"), SyntaxError);
    try {
        parse_input("ring n=2 field=Q\nx3\n");
        FAIL("expected UnknownVariable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownVariable);
    }
    try {
        parse_input("ring n=2 field=GF(3)\n1/3*x0\n");
        FAIL("expected BadCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadCharacteristic);
    }
    try {
        parse_input("ring n=2 field=Q\nmap coords=3\nx0\nx1^2\nx2\n");
        FAIL("expected DegreeMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeMismatch);
    }
    CHECK_THROWS_AS(read_input("/nonexistent/file.ideal"), Error);
}

TEST_CASE("printed files parse back")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Rng rng(seed);
        const Field field = seed % 2 ? Field::rationals() : Field::prime(kDefaultPrime);
        const Ring ring(static_cast<std::size_t>(rng.uniform(2, 5)), field);
        const unsigned degree = static_cast<unsigned>(rng.uniform(1, 3));
        std::vector<Polynomial> coords;
        for (std::size_t i = 0; i < ring.nvars(); ++i)
            coords.push_back(rng.nonzero_form(ring, degree, ring.nvars(), 50, 40));
        const RationalMap F = make_map(coords);
        const InputFile back = parse_input(format_map(F));
        REQUIRE(back.map);
        CHECK(*back.map == F);
        CHECK(format_map(*back.map) == format_map(F));

        const Ideal I(ring, coords);
        CHECK(parse_input(format_ideal(I)).ideal.generators() == I.generators());
    }
}
