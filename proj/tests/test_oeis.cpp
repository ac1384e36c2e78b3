#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <fstream>
#include <sstream>
#include <thread>

#include <doctest.h>

#include "oracles.hpp"
#include "tribokit/oeis.hpp"

using namespace tribokit;
using namespace tribokit::oeis;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture(std::string_view id) {
    return slurp(std::string(TRIBOKIT_FIXTURE_DIR) + "/" + bfile_name(id));
}

template <class F>
BFileError parse_error(F&& f) {
    try {
        f();
    } catch (const BFileError& e) {
        return e;
    }
    FAIL("no BFileError thrown");
    return BFileError(BFileError::Kind::Malformed, 0, "");
}

}  // namespace

TEST_CASE("ids and names") {
    CHECK(is_valid_id("A001644"));
    CHECK_FALSE(is_valid_id("A01644"));
    CHECK_FALSE(is_valid_id("B001644"));
    CHECK_FALSE(is_valid_id("A00164x"));
    CHECK(bfile_name("A001644") == "b001644.txt");
    CHECK_THROWS_AS(bfile_name("nope"), std::invalid_argument);
    CHECK(sequence_id(SequenceKind::Tribonacci) == "A000073");
    CHECK(sequence_id(SequenceKind::GeneralizedLucas) == "A001644");
    CHECK(sequence_id(SequenceKind::MinorSum) == "A073145");
    CHECK(index_shift("A000073") == -1);
    CHECK(index_shift("A001644") == 0);
    CHECK(index_shift("A073145") == 0);
}

TEST_CASE("parse_bfile accepts comments, blanks and big values") {
    const auto b = parse_bfile("# A001644\n\n0 3\n1 1\n  2\t3  \n# trailing\n3 -7\n"
                               "4 123456789012345678901234567890\n",
                               "A001644");
    CHECK(b.sequence_id == "A001644");
    REQUIRE(b.rows.size() == 5);
    CHECK(b.rows[0] == Row{0, 3});
    CHECK(b.rows[2] == Row{2, 3});
    CHECK(b.rows[3] == Row{3, -7});
    CHECK(b.rows[4].value == Integer("123456789012345678901234567890"));

    const auto crlf = parse_bfile("0 3\r\n1 1\r\n", "A001644");
    CHECK(crlf.rows.size() == 2);
    const auto gaps = parse_bfile("1 1\n5 11\n", "A001644");
    CHECK(gaps.rows[1] == Row{5, 11});
}

TEST_CASE("parse_bfile structural errors") {
    auto dup = parse_error([] { parse_bfile("0 3\n1 1\n1 3\n", "A001644"); });
    CHECK(dup.kind() == BFileError::Kind::Structural);
    CHECK(dup.line() == 3);
    auto down = parse_error([] { parse_bfile("0 3\n2 3\n1 1\n", "A001644"); });
    CHECK(down.kind() == BFileError::Kind::Structural);
    CHECK(down.line() == 3);
    auto empty = parse_error([] { parse_bfile("# nothing\n\n", "A001644"); });
    CHECK(empty.kind() == BFileError::Kind::Structural);
    CHECK(empty.line() == 0);
    auto id = parse_error([] { parse_bfile("0 3\n", "X1"); });
    CHECK(id.kind() == BFileError::Kind::Structural);
}

TEST_CASE("parse_bfile malformed lines report their line") {
    const char* bad[] = {"0 3\n1 x\n", "0 3\n1\n", "0 3\n1 1 1\n", "0 3\n1.5 1\n", "0 3\n- 1\n",
                         "0 3\n99999999999999999999999 1\n"};
    for (const char* text : bad) {
        CAPTURE(text);
        auto e = parse_error([&] { parse_bfile(text, "A001644"); });
        CHECK(e.kind() == BFileError::Kind::Malformed);
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 2") == 0);
    }
}

TEST_CASE("format_bfile") {
    CHECK(format_bfile(SequenceKind::GeneralizedLucas, 0, 4) == "0 3\n1 1\n2 3\n3 7\n4 11\n");
    CHECK(format_bfile(SequenceKind::MinorSum, 2, 3) == "2 -1\n3 5\n");
    CHECK_THROWS_AS(format_bfile(SequenceKind::MinorSum, -1, 3), std::domain_error);
    CHECK_THROWS_AS(format_bfile(SequenceKind::MinorSum, 4, 3), std::invalid_argument);
}

TEST_CASE("format then parse round-trips") {
    for (auto kind : {SequenceKind::Tribonacci, SequenceKind::GeneralizedLucas,
                      SequenceKind::MinorSum}) {
        const auto b = parse_bfile(format_bfile(kind, 0, 100), "A001644");
        REQUIRE(b.rows.size() == 101);
        for (Index n = 0; n <= 100; ++n) {
            REQUIRE(b.rows[static_cast<std::size_t>(n)] == Row{n, term(kind, n)});
        }
    }
}

TEST_CASE("bundled fixtures agree with the oracle and the library") {
    struct Case {
        SequenceKind kind;
        oracle::Sequence seq;
    };
    Case cases[] = {{SequenceKind::Tribonacci, oracle::T()},
                    {SequenceKind::GeneralizedLucas, oracle::S()},
                    {SequenceKind::MinorSum, oracle::C()}};
    for (auto& c : cases) {
        const std::string id(sequence_id(c.kind));
        CAPTURE(id);
        const auto b = parse_bfile(fixture(id), id);
        REQUIRE(b.rows.size() >= 50);
        const Index shift = index_shift(id);
        for (const auto& row : b.rows) REQUIRE(row.value == c.seq(row.index + shift));

        const auto report = crosscheck(c.kind, b, 50);
        CHECK(report.ok());
        CHECK(report.rows_compared == 50);
        CHECK(report.offset_used == shift);
        CHECK(report.sequence_id == id);

        const auto full = crosscheck(c.kind, b, b.rows.size());
        CHECK(full.ok());
        CHECK(full.rows_compared == b.rows.size());
    }
}

TEST_CASE("A000073 is off by one against T without the shift") {
    // Entry k of A000073 is T_{k-1}; crosschecking it as if unshifted must fail.
    auto b = parse_bfile(fixture("A000073"), "A000073");
    CHECK(b.rows[1].value == 0);
    CHECK(b.rows[2].value == 1);
    b.sequence_id = "A999999";
    CHECK_FALSE(crosscheck(SequenceKind::Tribonacci, b, 50).ok());
}

TEST_CASE("a corrupted row is reported exactly") {
    auto b = parse_bfile(fixture("A001644"), "A001644");
    const Integer original = b.rows[37].value;
    b.rows[37].value += 1;
    const auto report = crosscheck(SequenceKind::GeneralizedLucas, b, 50);
    REQUIRE(report.mismatches.size() == 1);
    CHECK(report.mismatches[0].index == 37);
    CHECK(report.mismatches[0].local == original);
    CHECK(report.mismatches[0].remote == original + 1);

    // Rows past the compared prefix are not examined.
    auto late = parse_bfile(fixture("A073145"), "A073145");
    late.rows[120].value = 0;
    CHECK(crosscheck(SequenceKind::MinorSum, late, 50).ok());
    CHECK_FALSE(crosscheck(SequenceKind::MinorSum, late, 200).ok());
}

TEST_CASE("fetch through an injected transport") {
    const Transport canned = [](std::string_view id) {
        CHECK(id == "A001644");
        return std::string("# canned\n0 3\n1 1\n2 3\n3 7\n");
    };
    const auto b = fetch_bfile("A001644", canned);
    CHECK(b.rows.size() == 4);
    CHECK(crosscheck(SequenceKind::GeneralizedLucas, b, 50).ok());

    const Transport empty = [](std::string_view) { return std::string(); };
    auto e = parse_error([&] { fetch_bfile("A001644", empty); });
    CHECK(e.kind() == BFileError::Kind::Structural);

    const Transport broken = [](std::string_view) -> std::string {
        throw std::runtime_error("connection refused");
    };
    try {
        fetch_bfile("A001644", broken);
        FAIL("expected FetchError");
    } catch (const FetchError& err) {
        const std::string what = err.what();
        CHECK(what.find("A001644") != std::string::npos);
        CHECK(what.find("connection refused") != std::string::npos);
    }
    CHECK_THROWS_AS(fetch_bfile("nope", canned), FetchError);
}

TEST_CASE("http transport against a local server") {
    httplib::Server server;
    server.Get("/A073145/b073145.txt", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(format_bfile(SequenceKind::MinorSum, 0, 60), "text/plain");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    const std::string base = "http://127.0.0.1:" + std::to_string(port);
    const auto b = fetch_bfile("A073145", http_transport(base + "/"));
    CHECK(b.rows.size() == 61);
    CHECK(crosscheck(SequenceKind::MinorSum, b, 61).ok());
    CHECK_THROWS_AS(fetch_bfile("A001644", http_transport(base)), FetchError);

    server.stop();
    worker.join();
}
