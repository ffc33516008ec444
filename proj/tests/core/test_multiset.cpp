#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/multiset.hpp"

using definetti::Error;
using definetti::ErrorCode;
using definetti::Multiset;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal_error;
}

}  // namespace

TEST_CASE("canonical text lists every symbol with its count") {
    auto m = Multiset::from_counts({"B", "W"}, {3, 2});
    CHECK(m.text() == "3*B+2*W");
    CHECK(m.size() == 5);
    CHECK(m.count("B") == 3);
    CHECK(m.count("W") == 2);
    CHECK(definetti::binary_multiset(0, 0).text() == "0*0+0*1");
    CHECK(definetti::binary_multiset(3, 0).text() == "0*0+3*1");
    CHECK(definetti::binary_multiset(1, 2).text() == "2*0+1*1");
}

TEST_CASE("parse inverts text") {
    auto m = Multiset::from_counts({"B", "W"}, {3, 2});
    CHECK(Multiset::parse(m.text()) == m);
    CHECK(Multiset::parse("0*0+0*1") == definetti::binary_multiset(0, 0));
    CHECK(Multiset::parse("1*a") == Multiset::from_counts({"a"}, {1}));
}

TEST_CASE("parse rejects malformed text") {
    CHECK(code_of([] { Multiset::parse(""); }) == ErrorCode::parse_error);
    CHECK(code_of([] { Multiset::parse("B+W"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { Multiset::parse("2*"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { Multiset::parse("-1*B"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { Multiset::parse("1*B+2*B"); }) == ErrorCode::bad_argument);
}

TEST_CASE("alphabet validation") {
    CHECK(code_of([] { Multiset::from_counts({}, {}); }) == ErrorCode::bad_argument);
    CHECK(code_of([] { Multiset::from_counts({"a", "a"}, {1, 1}); }) == ErrorCode::bad_argument);
    CHECK(code_of([] { Multiset::from_counts({"x y"}, {1}); }) == ErrorCode::bad_argument);
    CHECK(code_of([] { Multiset::from_counts({"a*b"}, {1}); }) == ErrorCode::bad_argument);
    CHECK(code_of([] { Multiset::from_counts({""}, {1}); }) == ErrorCode::bad_argument);
    CHECK(code_of([] { Multiset::from_counts({"a"}, {-1}); }) == ErrorCode::bad_argument);
    CHECK(code_of([] { Multiset::from_counts({"a", "b"}, {1}); }) == ErrorCode::bad_argument);
}

TEST_CASE("adding and removing adjust one count") {
    auto m = Multiset::from_counts({"B", "W"}, {1, 1});
    CHECK(m.adding("B") == Multiset::from_counts({"B", "W"}, {2, 1}));
    CHECK(m.removing("W") == Multiset::from_counts({"B", "W"}, {1, 0}));
    CHECK(code_of([&] { m.removing("W").removing("W"); }) == ErrorCode::bad_argument);
    CHECK(code_of([&] { m.adding("Q"); }) == ErrorCode::bad_argument);
    CHECK(m.adding_at(0) == m.adding("B"));
    CHECK(m.removing_at(1) == m.removing("W"));
}

TEST_CASE("accumulate counts a sequence against an alphabet") {
    auto m = definetti::accumulate({"a", "b"}, {"a", "b", "a"});
    CHECK(m == Multiset::from_counts({"a", "b"}, {2, 1}));
    CHECK(definetti::accumulate({"a", "b"}, {}) == Multiset::from_counts({"a", "b"}, {0, 0}));
    CHECK(code_of([] { definetti::accumulate({"a"}, {"b"}); }) == ErrorCode::bad_argument);
}

TEST_CASE("binary helpers") {
    CHECK(definetti::binary_alphabet() == std::vector<std::string>{"0", "1"});
    CHECK(definetti::accumulate_bits({0, 1, 1}) == definetti::binary_multiset(2, 1));
    CHECK(definetti::is_binary(definetti::binary_multiset(1, 1)));
    CHECK_FALSE(definetti::is_binary(Multiset::from_counts({"B", "W"}, {1, 1})));
    CHECK(definetti::ones_count(definetti::binary_multiset(2, 3)) == 2);
}

TEST_CASE("counting bijection between {0..K} and binary multisets of size K") {
    definetti::BinaryCountIso iso{5};
    CHECK(iso.to_multiset(2).text() == "3*0+2*1");
    CHECK(iso.ones(definetti::binary_multiset(2, 3)) == 2);
    for (std::int64_t k = 0; k <= 5; ++k) CHECK(iso.ones(iso.to_multiset(k)) == k);
    CHECK(code_of([&] { iso.to_multiset(6); }) == ErrorCode::out_of_range);
    CHECK(code_of([&] { iso.to_multiset(-1); }) == ErrorCode::out_of_range);
    CHECK(code_of([&] { iso.ones(definetti::binary_multiset(1, 1)); }) ==
          ErrorCode::bad_argument);
    CHECK(code_of([&] { iso.ones(Multiset::from_counts({"B", "W"}, {2, 3})); }) ==
          ErrorCode::bad_argument);
}

TEST_CASE("index lookups") {
    auto m = Multiset::from_counts({"B", "W"}, {1, 2});
    CHECK(m.index_of("W") == 1);
    CHECK(m.count_at(1) == 2);
    CHECK(code_of([&] { m.index_of("Q"); }) == ErrorCode::bad_argument);
    CHECK(code_of([&] { m.count_at(2); }) == ErrorCode::bad_argument);
}
