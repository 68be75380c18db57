#pragma once

#include <limits>
#include <string>

#include <json.hpp>

#include "conglat/exotic.hpp"
#include "conglat/finalg.hpp"
#include "conglat/latgen.hpp"
#include "conglat/natint.hpp"
#include "conglat/padic.hpp"
#include "conglat/recsets.hpp"

/**
 * JSON encodings of the library's value types.  All schemas carry a
 * "schema":1 version field; integers are emitted as JSON numbers when they
 * fit in 64 bits and as decimal strings otherwise, and both forms are
 * accepted on input.
 */
namespace conglat::io {

using json = nlohmann::json;

inline json big_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return x.convert_to<long long>();
    return x.str();
}

inline BigInt big_from_json(const json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<unsigned long long>());
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::domain_error("expected an integer or a decimal string");
}

inline void require_schema(const json& j) {
    if (j.contains("schema") && j["schema"] != 1)
        throw std::domain_error("unsupported schema version");
}

// ---- FnTable: {"domain":"N|Z|Nx","lo":...,"hi":...,"values":[...]} ----

inline json to_json(const natint::FnTable& t) {
    const char* dom = t.domain == natint::Domain::N ? "N"
                      : t.domain == natint::Domain::Z ? "Z" : "Nx";
    json vals = json::array();
    for (const auto& v : t.values) vals.push_back(big_to_json(v));
    return {{"schema", 1}, {"domain", dom}, {"lo", big_to_json(t.lo)},
            {"hi", big_to_json(t.hi)}, {"values", vals}};
}

inline natint::FnTable fn_table_from_json(const json& j) {
    require_schema(j);
    std::string dom = j.at("domain").get<std::string>();
    natint::Domain d;
    if (dom == "N") d = natint::Domain::N;
    else if (dom == "Z") d = natint::Domain::Z;
    else if (dom == "Nx") d = natint::Domain::NPos;
    else throw std::domain_error("FnTable: domain must be N, Z or Nx");
    std::vector<BigInt> vals;
    for (const auto& v : j.at("values")) vals.push_back(big_from_json(v));
    return natint::FnTable(d, big_from_json(j.at("lo")), big_from_json(j.at("hi")),
                           std::move(vals));
}

// ---- UPSetN / UPSetZ: {"carrier":"N","a":..,"k":..,"F":[..],"R":[..]} /
//                       {"carrier":"Z","k":..,"G":[..]}; normalized on load ----

inline json to_json(const recsets::UPSetN& s) {
    recsets::UPSetN n = s.normalized();
    json F = json::array(), R = json::array();
    for (unsigned i = 0; i < n.threshold(); ++i)
        if (n.head_bits()[i]) F.push_back(i);
    for (unsigned j2 = 0; j2 < n.period(); ++j2)
        if (n.cycle_bits()[j2]) R.push_back(j2);
    return {{"schema", 1}, {"carrier", "N"}, {"a", n.threshold()}, {"k", n.period()},
            {"F", F}, {"R", R}};
}

inline json to_json(const recsets::UPSetZ& s) {
    recsets::UPSetZ n = s.normalized();
    json G = json::array();
    for (unsigned j2 = 0; j2 < n.period(); ++j2)
        if (n.bits()[j2]) G.push_back(j2);
    return {{"schema", 1}, {"carrier", "Z"}, {"k", n.period()}, {"G", G}};
}

inline recsets::UPSetN upset_n_from_json(const json& j) {
    require_schema(j);
    unsigned a = j.value("a", 0u);
    unsigned k = j.value("k", 1u);
    std::vector<bool> F(a, false), R(k, false);
    if (j.contains("F"))
        for (const auto& v : j.at("F")) F.at(v.get<unsigned>()) = true;
    if (j.contains("R"))
        for (const auto& v : j.at("R")) R.at(v.get<unsigned>()) = true;
    return recsets::UPSetN(a, k, std::move(F), std::move(R)).normalized();
}

inline recsets::UPSetZ upset_z_from_json(const json& j) {
    require_schema(j);
    unsigned k = j.at("k").get<unsigned>();
    std::vector<bool> G(k, false);
    const char* key = j.contains("G") ? "G" : "F";
    if (j.contains(key))
        for (const auto& v : j.at(key)) G.at(v.get<unsigned>()) = true;
    return recsets::UPSetZ(k, std::move(G)).normalized();
}

// ---- FiniteAlgebra: {"n":..., "ops":[{"arity":...,"table":[...]}]} ----

inline json to_json(const finalg::FiniteAlgebra& A) {
    json ops = json::array();
    for (const auto& op : A.ops()) {
        json table = json::array();
        for (auto e : op.table) table.push_back(e);
        ops.push_back({{"arity", op.arity}, {"table", table}});
    }
    return {{"schema", 1}, {"n", A.size()}, {"ops", ops}};
}

inline finalg::FiniteAlgebra finite_algebra_from_json(const json& j) {
    require_schema(j);
    unsigned n = j.at("n").get<unsigned>();
    std::vector<finalg::Operation> ops;
    for (const auto& o : j.at("ops")) {
        finalg::Operation op{o.at("arity").get<unsigned>(), {}};
        for (const auto& e : o.at("table")) op.table.push_back(e.get<unsigned>());
        ops.push_back(std::move(op));
    }
    return finalg::FiniteAlgebra(n, std::move(ops));
}

// ---- PAdicApprox: {"p":...,"n":...,"value":...} ----

inline json to_json(const padic::PAdicApprox& x) {
    return {{"schema", 1}, {"p", x.prime()}, {"n", x.precision()},
            {"value", big_to_json(x.value())}, {"digits", x.digits()}};
}

inline padic::PAdicApprox padic_from_json(const json& j) {
    require_schema(j);
    return padic::PAdicApprox(j.at("p").get<unsigned>(), j.at("n").get<unsigned>(),
                              big_from_json(j.at("value")));
}

// ---- CPWitnessTable: FnTable plus certificate block ----

inline json to_json(const exotic::CPWitnessTable& w) {
    json j = to_json(w.table);
    j["certificate"] = {{"pairwise_divisibility", w.certificate.pairwise_divisibility},
                        {"over_linear", w.certificate.over_linear},
                        {"divisibility_policy", w.certificate.divisibility_policy},
                        {"representative_policy", w.certificate.representative_policy}};
    return j;
}

// ---- GeneratedFamily: members plus DNF provenance ----

inline json to_json(const latgen::GeneratedFamily& fam) {
    json gens = json::array();
    for (const auto& g : fam.generators()) gens.push_back(g.describe());
    json members = json::array();
    for (std::size_t i = 0; i < fam.size(); ++i) {
        json m;
        m["mask"] = fam.members()[i];
        if (std::holds_alternative<latgen::detail::ClassesZ>(fam.classes()))
            m["set"] = to_json(member_as_upset_z(fam, i));
        else if (std::holds_alternative<latgen::detail::ClassesN>(fam.classes()))
            m["set"] = to_json(member_as_upset_n(fam, i));
        else if (const auto* cm =
                     std::get_if<latgen::detail::ClassesMulFinite>(&fam.classes())) {
            json elems = json::array();
            bool cofinite = (fam.members()[i] >> cm->sink) & 1u;
            for (std::size_t e = 0; e < cm->universe.size(); ++e)
                if ((fam.members()[i] >> cm->class_of_el[e]) & 1u)
                    elems.push_back(big_to_json(cm->universe[e]));
            m["set"] = elems;
            if (cofinite) m["cofinite"] = true;  // plus everything outside the divisor universe
        } else {
            const auto& cp = std::get<latgen::detail::ClassesZp>(fam.classes());
            json residues = json::array();
            for (unsigned r = 0; r < cp.pn; ++r)
                if ((fam.members()[i] >> r) & 1u) residues.push_back(r);
            m["set"] = {{"p", cp.p}, {"n", cp.prec}, {"F", residues}};
        }
        json dnf = json::array();
        for (const auto& term : fam.dnf(i)) {
            json t;
            t["meet"] = term.pos;
            if (!term.neg.empty()) t["meet_complements"] = term.neg;
            dnf.push_back(t);
        }
        m["dnf"] = dnf;
        members.push_back(std::move(m));
    }
    return {{"schema", 1},
            {"kind", fam.kind() == latgen::ClosureKind::lattice ? "lattice" : "boolean"},
            {"signature", fam.signature() == latgen::Signature::add ? "add"
                          : fam.signature() == latgen::Signature::mul ? "mul" : "add_mul"},
            {"index", fam.index()},
            {"generators", gens},
            {"members", members}};
}

}  // namespace conglat::io
