#include <catch2/catch_amalgamated.hpp>

#include "conglat/io.hpp"

using conglat::BigInt;
namespace io = conglat::io;
namespace ni = conglat::natint;
namespace rs = conglat::recsets;

TEST_CASE("big integers as numbers or strings") {
    REQUIRE(io::big_to_json(BigInt(42)).is_number());
    BigInt huge = conglat::pow_u(BigInt(10), 30);
    REQUIRE(io::big_to_json(huge).is_string());
    REQUIRE(io::big_from_json(io::big_to_json(huge)) == huge);
    REQUIRE(io::big_from_json(io::json(-7)) == -7);
    REQUIRE(io::big_from_json(io::json("123456789012345678901234567890")) ==
            BigInt("123456789012345678901234567890"));
}

TEST_CASE("FnTable schema") {
    auto t = ni::FnTable::tabulate(ni::Domain::Z, -2, 2, [](const BigInt& x) { return x * x; });
    auto j = io::to_json(t);
    REQUIRE(j["schema"] == 1);
    REQUIRE(j["domain"] == "Z");
    auto back = io::fn_table_from_json(j);
    REQUIRE(back.values == t.values);
    REQUIRE(back.lo == t.lo);
    REQUIRE(back.domain == t.domain);

    auto parsed = io::fn_table_from_json(io::json::parse(
        R"({"domain":"N","lo":0,"hi":2,"values":[1,2,3]})"));
    REQUIRE(parsed.domain == ni::Domain::N);
    REQUIRE(parsed(2) == 3);

    REQUIRE_THROWS_AS(io::fn_table_from_json(io::json::parse(
                          R"({"domain":"Q","lo":0,"hi":0,"values":[0]})")),
                      std::domain_error);
}

TEST_CASE("UPSet schemas normalize on load") {
    auto j = io::json::parse(R"({"carrier":"N","a":3,"k":4,"F":[1],"R":[0,2]})");
    auto L = io::upset_n_from_json(j);
    // the 2-periodic cycle is reduced on load
    REQUIRE(L.period() == 2);
    auto round = io::upset_n_from_json(io::to_json(L));
    REQUIRE(set_equal(round, L));

    auto z = io::upset_z_from_json(io::json::parse(R"({"k":10,"G":[6]})"));
    REQUIRE(z.member(-4));
    auto zj = io::to_json(z);
    REQUIRE(zj["carrier"] == "Z");
    REQUIRE(set_equal(io::upset_z_from_json(zj), z));
}

TEST_CASE("FiniteAlgebra schema") {
    auto A = conglat::finalg::FiniteAlgebra::cyclic_add(3);
    auto j = io::to_json(A);
    auto back = io::finite_algebra_from_json(j);
    REQUIRE(back.size() == 3);
    conglat::finalg::Element args[2] = {1, 2};
    REQUIRE(back.apply(0, args) == 0);
}

TEST_CASE("PAdic schema") {
    conglat::padic::PAdicApprox x(2, 4, 11);
    auto j = io::to_json(x);
    REQUIRE(j["digits"] == "1101");
    auto back = io::padic_from_json(j);
    REQUIRE(back == x);
}

TEST_CASE("witness tables carry their certificate") {
    auto F = conglat::exotic::appendix_F(16);
    auto j = io::to_json(F);
    REQUIRE(j["certificate"]["pairwise_divisibility"] == true);
    REQUIRE(j["certificate"]["over_linear"] == true);
    REQUIRE(j["certificate"]["divisibility_policy"] == "full");
}

TEST_CASE("family dump") {
    auto fam = conglat::latgen::generate(rs::UPSetZ::progression(1, 3),
                                         conglat::latgen::Signature::add,
                                         conglat::latgen::ClosureKind::lattice);
    auto j = io::to_json(fam);
    REQUIRE(j["index"] == 3);
    REQUIRE(j["members"].size() == fam.size());
    REQUIRE(j["generators"].size() == 3);
    // deterministic double render
    REQUIRE(io::to_json(fam).dump() == j.dump());

    auto zp = conglat::padic::generate_zp(conglat::padic::RecSetZp::from_elements(2, 2, {3}),
                                          conglat::latgen::ClosureKind::lattice);
    auto jz = io::to_json(zp);
    REQUIRE(jz["index"] == 4);
    REQUIRE(jz["members"][0]["set"].contains("p"));
}
