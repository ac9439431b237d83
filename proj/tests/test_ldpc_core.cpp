#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "recon/errors.hpp"
#include "recon/parity_check_code.hpp"

using namespace recon;

namespace {

// H = {110, 011}
ParityCheckCode tiny_code() {
    return ParityCheckCode(3, {{0, 1}, {1, 2}});
}

const char* tiny_alist =
    "3 2\n"
    "2 2\n"
    "1 2 1\n"
    "2 2\n"
    "1 0\n"
    "1 2\n"
    "2 0\n"
    "1 2\n"
    "2 3\n";

} // namespace

TEST_CASE("syndrome of hand-checked vectors") {
    ParityCheckCode code = tiny_code();
    CHECK(syndrome(code, BitString::from_string("000")).to_string() == "00");
    CHECK(syndrome(code, BitString::from_string("101")).to_string() == "11");
    // codewords of {110,011} are 000 and 111
    CHECK(syndrome(code, BitString::from_string("111")).popcount() == 0);
    CHECK_THROWS_AS(syndrome(code, BitString::from_string("0000")), DimensionError);
}

TEST_CASE("syndrome is linear") {
    ParityCheckCode code = generate_gallager(60, 3, 6, 5);
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        BitString x = BitString::random(60, 2 * trial);
        BitString y = BitString::random(60, 2 * trial + 1);
        CHECK(syndrome(code, x ^ y) == (syndrome(code, x) ^ syndrome(code, y)));
    }
}

TEST_CASE("code accessors and validation") {
    ParityCheckCode code = tiny_code();
    CHECK(code.length() == 3);
    CHECK(code.rows() == 2);
    CHECK(code.dimension() == 1);
    CHECK(code.base_rate() == Rational(1, 3));
    CHECK(code.edge_count() == 4);
    CHECK(has_full_row_rank(code));

    CHECK_THROWS_AS(ParityCheckCode(3, {{0, 1}, {1, 3}}), ConstructionError);
    CHECK_THROWS_AS(ParityCheckCode(3, {{0, 0}}), ConstructionError);
    CHECK_THROWS_AS(ParityCheckCode(3, {{0}, {1}, {2}}), ConstructionError);
    // duplicate rows are rank deficient
    CHECK_FALSE(has_full_row_rank(ParityCheckCode(3, {{0, 1}, {0, 1}})));
    CHECK_THROWS_AS(ParityCheckCode(3, {{0, 1}, {0, 1}}, RankCheck::verify),
                    ConstructionError);
}

TEST_CASE("fingerprint identifies the matrix") {
    CHECK(tiny_code().fingerprint() == tiny_code().fingerprint());
    ParityCheckCode other(3, {{0, 1}, {0, 2}});
    CHECK(other.fingerprint() != tiny_code().fingerprint());
}

TEST_CASE("alist ingestion of the hand-written matrix") {
    std::istringstream in(tiny_alist);
    ParityCheckCode code = load_alist(in);
    CHECK(code.length() == 3);
    CHECK(code.rows() == 2);
    CHECK(code.row_adjacency() == tiny_code().row_adjacency());
    CHECK(code.fingerprint() == tiny_code().fingerprint());
}

TEST_CASE("alist rejects malformed input with line numbers") {
    auto load = [](const std::string& text) {
        std::istringstream in(text);
        return load_alist(in);
    };
    CHECK_THROWS_AS(load(""), ParseError);
    CHECK_THROWS_WITH_AS(load("3\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(load("3 2\n2\n"), doctest::Contains("line 2"), ParseError);
    // zero index inside the declared degree
    CHECK_THROWS_WITH_AS(
        load("3 2\n2 2\n1 2 1\n2 2\n0 0\n1 2\n2 0\n1 2\n2 3\n"),
        doctest::Contains("1-based"), ParseError);
    // degree sums disagree
    CHECK_THROWS_WITH_AS(load("3 2\n2 2\n1 2 1\n2 1\n"),
                         doctest::Contains("sum"), ParseError);
    // column and row views disagree
    CHECK_THROWS_WITH_AS(
        load("3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 3\n2 3\n"),
        doctest::Contains("disagrees"), ParseError);
    // non-numeric garbage
    CHECK_THROWS_WITH_AS(load("3 x\n"), doctest::Contains("token"), ParseError);
    // truncated adjacency
    CHECK_THROWS_WITH_AS(load("3 2\n2 2\n1 2 1\n2 2\n1 0\n"),
                         doctest::Contains("end of input"), ParseError);
}

TEST_CASE("alist round trip is byte identical") {
    ParityCheckCode code = generate_gallager(48, 3, 6, 9);
    std::ostringstream first;
    write_alist(code, first);
    std::istringstream in(first.str());
    ParityCheckCode reload = load_alist(in, RankCheck::skip);
    CHECK(reload.row_adjacency() == code.row_adjacency());
    std::ostringstream second;
    write_alist(reload, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("gallager construction degrees and determinism") {
    ParityCheckCode small = generate_gallager(6, 2, 3, 1);
    CHECK(small.rows() == 4);
    for (const auto& col : small.column_adjacency()) CHECK(col.size() == 2);
    for (const auto& row : small.row_adjacency()) CHECK(row.size() == 3);

    ParityCheckCode big = generate_gallager(2000, 3, 6, 31);
    CHECK(big.rows() == 1000);
    CHECK(big.base_rate() == Rational(1, 2));
    for (const auto& col : big.column_adjacency()) CHECK(col.size() == 3);
    for (const auto& row : big.row_adjacency()) CHECK(row.size() == 6);

    ParityCheckCode again = generate_gallager(2000, 3, 6, 31);
    CHECK(again.row_adjacency() == big.row_adjacency());
    ParityCheckCode other = generate_gallager(2000, 3, 6, 32);
    CHECK(other.row_adjacency() != big.row_adjacency());
}

TEST_CASE("gallager rejects impossible degree arithmetic") {
    CHECK_THROWS_AS(generate_gallager(5, 2, 3, 1), ConstructionError);
    CHECK_THROWS_AS(generate_gallager(6, 1, 3, 1), ConstructionError);
    CHECK_THROWS_AS(generate_gallager(6, 3, 3, 1), ConstructionError);
}
