#include <doctest.h>

#include "ivc/bounds.hpp"
#include "ivc/error.hpp"

using namespace ivc;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("product bounds") {
    auto t12 = bound_report("t12", {{"w", 2}, {"W", 3}, {"r", 2}});
    CHECK(t12.kind == ProductKind::tensor);
    CHECK(t12.w_upper == 4);
    CHECK(t12.W_lower == 6);

    auto t13 = bound_report("t13", {{"w", 2}, {"W", 3}, {"r", 2}});
    CHECK(t13.w_upper == 6);
    CHECK(t13.W_lower == 9);

    auto t14 = bound_report("t14", {{"w", 2}, {"W", 3}, {"r", 2}});
    CHECK(t14.kind == ProductKind::strong);
    CHECK(t14.w_upper == 8);
    CHECK(t14.W_lower == 11);

    auto t16 = bound_report("t16", {{"w", 2}, {"W", 3}, {"n", 2}});
    CHECK(t16.w_upper == 4);
    CHECK(t16.W_lower == 7);

    auto t17 = bound_report("t17", {{"w", 3}, {"W", 4}, {"n", 2}, {"r", 1}});
    CHECK(t17.w_upper == 7);
    CHECK(t17.W_lower == 9);

    auto t2 = bound_report("t2", {{"wG", 2}, {"WG", 3}, {"wH", 2}, {"WH", 2}});
    CHECK(t2.kind == ProductKind::cartesian);
    CHECK(t2.w_upper == 4);
    CHECK(t2.W_lower == 5);
}

TEST_CASE("family formulas") {
    CHECK(bound_report("t7", {{"n", 2}}).W_lower == 4);  // K4
    CHECK(bound_report("t7", {{"n", 3}}).W_lower == 7);  // K6: p = 3, q = 0
    CHECK(bound_report("t7", {{"n", 4}}).W_lower == 11); // K8: p = 1, q = 2
    CHECK(bound_report("t6", {{"n", 3}}).W_lower == 6);
    CHECK(bound_report("t6", {{"n", 4}}).W_lower == 10);
    CHECK(bound_report("t5", {{"m", 2}, {"n", 2}}).W_lower == 8);
    CHECK(bound_report("t5", {{"m", 2}, {"n", 3}}).W_lower == 11);
    CHECK(bound_report("t4", {{"m", 1}, {"n", 2}}).W_lower == 3);
    CHECK(bound_report("t3", {{"delta", 4}}).w_upper == 4);

    auto t8 = bound_report("t8", {{"n", 2}, {"k", 3}});
    CHECK(t8.w_upper == 9);
    CHECK(t8.W_lower == 12);
}

TEST_CASE("reports never claim a missing side") {
    auto t6 = bound_report("t6", {{"n", 3}});
    CHECK_FALSE(t6.w_upper.has_value());
    CHECK_FALSE(t6.kind.has_value());
    CHECK(t6.source == "t6");
}

TEST_CASE("bound errors") {
    CHECK(code_of([] { bound_report("t12", {{"w", 2}, {"W", 3}}); }) == ErrorCode::MissingParameter);
    CHECK(code_of([] { bound_report("t99", {}); }) == ErrorCode::BadParameter);
    CHECK(code_of([] { bound_report("t5", {{"m", 1}, {"n", 2}}); }) == ErrorCode::BadParameter);
    CHECK(code_of([] { bound_report("t7", {{"n", 0}}); }) == ErrorCode::BadParameter);
}

TEST_CASE("every listed theorem id is accepted") {
    std::map<std::string, long long> all = {{"w", 2},  {"W", 3},  {"r", 2},  {"n", 2},
                                            {"m", 2},  {"k", 2},  {"wG", 1}, {"WG", 1},
                                            {"wH", 1}, {"WH", 1}, {"delta", 3}};
    for (const auto& id : bound_theorems()) CHECK_NOTHROW(bound_report(id, all));
}
