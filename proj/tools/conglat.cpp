// Command-line frontend: batch commands over JSON inputs with JSON reports
// (and DOT export where a digraph is the natural output).
//
// Exit codes: 0 success, 1 refuted / counterexample found, 2 input error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conglat/io.hpp"
#include "conglat/suite.hpp"

namespace io = conglat::io;
using conglat::BigInt;
using io::json;

namespace {

json parse_arg(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::domain_error("cannot open input file: " + arg);
    json j;
    in >> j;
    return j;
}

int emit(const json& report, int code) {
    json out = report;
    out["schema"] = 1;
    std::cout << out.dump(2) << std::endl;
    return code;
}

json refutation_json(const conglat::natint::Refutation& r) {
    json w = json::array();
    for (const auto& x : r.witness) w.push_back(io::big_to_json(x));
    return {{"law", r.law}, {"witness", w}};
}

int cmd_check_cp(const std::string& fn_arg, const std::string& zp_arg) {
    if (!zp_arg.empty()) {
        json j = parse_arg(zp_arg);
        unsigned p = j.at("p").get<unsigned>(), n = j.at("n").get<unsigned>();
        std::vector<BigInt> table;
        for (const auto& v : j.at("table")) table.push_back(io::big_from_json(v));
        auto verdict = conglat::padic::check_cp_zp(p, n, table);
        if (!verdict)
            return emit({{"command", "check-cp"}, {"verdict", "consistent-cp"},
                         {"summary", "divisibility condition holds on all residue pairs"}}, 0);
        return emit({{"command", "check-cp"}, {"verdict", "refuted"},
                     {"witness", {io::big_to_json(verdict->x), io::big_to_json(verdict->y)}},
                     {"summary", "(x-y) does not divide (f(x)-f(y)) at the witness pair"}}, 1);
    }
    auto t = io::fn_table_from_json(parse_arg(fn_arg));
    auto verdict = conglat::natint::check_cp_additive(t);
    if (!verdict)
        return emit({{"command", "check-cp"}, {"verdict", "consistent-cp"},
                     {"summary", "no counterexample in the window"}}, 0);
    return emit({{"command", "check-cp"}, {"verdict", "refuted"},
                 {"refutation", refutation_json(*verdict)},
                 {"summary", "refuted by the " + verdict->law + " clause"}}, 1);
}

int cmd_check_spp(const std::string& fn_arg) {
    auto t = io::fn_table_from_json(parse_arg(fn_arg));
    auto verdict = conglat::natint::check_spp_additive(t);
    if (!verdict)
        return emit({{"command", "check-spp"}, {"verdict", "consistent-spp"},
                     {"summary", "congruence preserving and nondecreasing on the window"}}, 0);
    return emit({{"command", "check-spp"}, {"verdict", "refuted"},
                 {"refutation", refutation_json(*verdict)},
                 {"summary", "refuted by the " + verdict->law + " clause"}}, 1);
}

int cmd_check_monomial(const std::string& fn_arg) {
    auto t = io::fn_table_from_json(parse_arg(fn_arg));
    auto verdict = conglat::natint::check_cp_multiplicative(t);
    if (auto* fit = std::get_if<conglat::natint::MonomialFit>(&verdict))
        return emit({{"command", "check-monomial"}, {"verdict", "monomial"},
                     {"coefficient", io::big_to_json(fit->coeff)}, {"degree", fit->degree},
                     {"summary", "f(x) = " + fit->coeff.str() + " * x^" +
                                     std::to_string(fit->degree) + " on the window"}}, 0);
    auto& r = std::get<conglat::natint::Refutation>(verdict);
    return emit({{"command", "check-monomial"}, {"verdict", "refuted"},
                 {"refutation", refutation_json(r)},
                 {"summary", "not of monomial shape at the witness point"}}, 1);
}

int cmd_lattice(const std::string& carrier, const std::string& set_arg,
                const std::string& signature, const std::string& kind_name, unsigned max_index,
                const std::string& dot_path) {
    using namespace conglat::latgen;
    ClosureKind kind =
        kind_name == "boolean" ? ClosureKind::boolean_algebra : ClosureKind::lattice;
    Signature sig = signature == "mul"      ? Signature::mul
                    : signature == "add-mul" ? Signature::add_mul
                                             : Signature::add;
    json j = parse_arg(set_arg);
    std::optional<GeneratedFamily> fam;
    if (carrier == "Z" || (j.is_object() && j.value("carrier", "") == "Z"))
        fam = generate(io::upset_z_from_json(j), sig, kind, max_index);
    else if (carrier == "Nx" || j.is_array()) {
        std::vector<BigInt> elems;
        for (const auto& v : (j.is_array() ? j : j.at("elements")))
            elems.push_back(io::big_from_json(v));
        fam = generate_finite_mul(elems, kind, max_index);
    } else
        fam = generate(io::upset_n_from_json(j), sig, kind, max_index);
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        out << to_dot(*fam);
    }
    json report = io::to_json(*fam);
    report["command"] = "lattice";
    report["count"] = fam->size();
    report["summary"] = std::to_string(fam->size()) + " members over " +
                        std::to_string(fam->index()) + " syntactic classes";
    return emit(report, 0);
}

int cmd_syncong(const std::string& set_arg, const std::string& algebra_arg,
                const std::string& subset_arg) {
    if (!algebra_arg.empty()) {
        auto A = io::finite_algebra_from_json(parse_arg(algebra_arg));
        conglat::finalg::Subset L = 0;
        for (const auto& v : parse_arg(subset_arg))
            L |= conglat::finalg::Subset(1) << v.get<unsigned>();
        auto part = conglat::finalg::syntactic_congruence(A, L);
        auto ord = conglat::finalg::syntactic_preorder(A, L);
        json classes = json::array();
        for (unsigned c = 0; c < part.num_classes(); ++c) {
            json cls = json::array();
            for (unsigned x = 0; x < A.size(); ++x)
                if (part.cls(x) == c) cls.push_back(x);
            classes.push_back(cls);
        }
        json rows = json::array();
        for (unsigned x = 0; x < A.size(); ++x) {
            json row = json::array();
            for (unsigned y = 0; y < A.size(); ++y) row.push_back(ord.get(x, y) ? 1 : 0);
            rows.push_back(row);
        }
        return emit({{"command", "syncong"}, {"classes", classes}, {"preorder", rows},
                     {"summary", std::to_string(part.num_classes()) + " syntactic classes"}}, 0);
    }
    json j = parse_arg(set_arg);
    if (j.is_object() && j.value("carrier", "N") == "Z") {
        auto L = io::upset_z_from_json(j);
        return emit({{"command", "syncong"}, {"carrier", "Z"},
                     {"k", L.normalized().period()},
                     {"summary", "syntactic congruence is mod " +
                                     std::to_string(L.normalized().period())}}, 0);
    }
    auto L = io::upset_n_from_json(j);
    auto [a, k] = L.syntactic_index();
    return emit({{"command", "syncong"}, {"carrier", "N"}, {"a", a}, {"k", k},
                 {"index", a + k},
                 {"summary", "coarsest saturating congruence is ~_{" + std::to_string(a) + "," +
                                 std::to_string(k) + "}, index " + std::to_string(a + k)}}, 0);
}

int cmd_fryingpan(unsigned a, unsigned k, bool dot, bool tables) {
    conglat::fryingpan::FryingPan pan(a, k);
    if (dot) {
        std::cout << conglat::fryingpan::to_dot(pan);
        return 0;
    }
    json report{{"command", "fryingpan"}, {"a", a}, {"k", k}, {"size", pan.size()}};
    json gens = json::array();
    for (unsigned g : pan.generators()) gens.push_back(g);
    report["generators"] = gens;
    report["surjective_morphisms"] = io::big_to_json(pan.surjective_morphism_count());
    auto violation = conglat::fryingpan::semiring_check(pan);
    report["semiring"] = !violation.has_value();
    if (tables) {
        json add = json::array(), mul = json::array();
        for (unsigned x = 0; x < pan.size(); ++x) {
            json ra = json::array(), rm = json::array();
            for (unsigned y = 0; y < pan.size(); ++y) {
                ra.push_back(pan.add(x, y));
                rm.push_back(pan.mul(x, y));
            }
            add.push_back(ra);
            mul.push_back(rm);
        }
        report["add"] = add;
        report["mul"] = mul;
    }
    report["summary"] = "M_{" + std::to_string(a) + "," + std::to_string(k) + "}: " +
                        std::to_string(gens.size()) + " generator(s)";
    return emit(report, 0);
}

int cmd_construct(const std::string& what, unsigned max, const std::string& target_arg,
                  const std::string& policy, std::size_t samples) {
    using namespace conglat::exotic;
    if (what == "e-factorial" || what == "zigzag") {
        auto t = conglat::natint::FnTable::tabulate(
            conglat::natint::Domain::N, 0, max, [&](const BigInt& x) {
                unsigned xi = unsigned(conglat::to_ulong(x));
                return what == "e-factorial" ? floor_e_factorial(xi) : zigzag_f(xi);
            });
        json report = io::to_json(t);
        report["command"] = "construct";
        report["construction"] = what;
        report["summary"] = what + " tabulated on 0.." + std::to_string(max);
        return emit(report, 0);
    }
    CPWitnessTable w = [&] {
        if (what == "appendix-F")
            return appendix_F(max, policy == "sampled" ? PairwisePolicy::sampled
                                                       : PairwisePolicy::full,
                              samples);
        if (what == "window-lift")
            return cp_window_lift(io::fn_table_from_json(parse_arg(target_arg)));
        throw std::domain_error("unknown construction: " + what);
    }();
    json report = io::to_json(w);
    report["command"] = "construct";
    report["construction"] = what;
    report["summary"] = what + " built on 0.." + w.table.hi.str() + "; certificate " +
                        (w.certificate.pairwise_divisibility ? "passed" : "FAILED");
    return emit(report, w.certificate.pairwise_divisibility ? 0 : 1);
}

int cmd_padic_extend(const std::string& fn_arg, const std::string& construct, unsigned max,
                     unsigned p, unsigned n, const std::string& value, bool minus_one) {
    conglat::exotic::CPWitnessTable w = [&] {
        if (!construct.empty()) {
            if (construct != "appendix-F")
                throw std::domain_error("padic-extend supports --construct appendix-F");
            return conglat::exotic::appendix_F(
                max, max > 4096 ? conglat::exotic::PairwisePolicy::sampled
                                : conglat::exotic::PairwisePolicy::full);
        }
        auto t = io::fn_table_from_json(parse_arg(fn_arg));
        return conglat::exotic::CPWitnessTable{t, conglat::exotic::certify(t)};
    }();
    if (!w.certificate.pairwise_divisibility)
        throw std::domain_error("table is not certified congruence preserving");
    BigInt v = minus_one ? BigInt(-1) : BigInt(value);
    conglat::padic::PAdicApprox x(p, n, v);
    auto result = conglat::padic::cp_extend(w, x);
    json report{{"command", "padic-extend"}, {"input", io::to_json(x)},
                {"result", io::to_json(result)},
                {"summary", "f^(" + v.str() + ") = " + result.value().str() + " mod " +
                                x.modulus().str()}};
    return emit(report, 0);
}

int cmd_verify_suite(unsigned extension_precision) {
    auto results = conglat::suite::run_all(&std::cout, extension_precision);
    json rows = json::array();
    int failed = 0;
    for (const auto& r : results) {
        rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
        if (!r.pass) ++failed;
    }
    return emit({{"command", "verify-suite"}, {"criteria", rows},
                 {"summary", failed == 0 ? "all criteria passed"
                                         : std::to_string(failed) + " criteria failed"}},
                failed == 0 ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"congruence preservation, recognizable sets and their lattices"};
    app.require_subcommand(1);

    std::string fn_arg, zp_arg, set_arg, algebra_arg, subset_arg, carrier, signature = "add",
                kind = "lattice", dot_path, what, target_arg, policy = "full", construct, value;
    unsigned a = 0, k = 1, max = 16, p = 2, n = 1, max_index = 13, ext_precision = 16;
    std::size_t samples = 1'000'000;
    bool dot = false, tables = false, minus_one = false;

    auto* c_cp = app.add_subcommand("check-cp", "congruence preservation of a window table");
    c_cp->add_option("--fn", fn_arg, "FnTable JSON (inline or file)");
    c_cp->add_option("--zp", zp_arg, "residue table JSON {p,n,table} for Z_p");

    auto* c_spp = app.add_subcommand("check-spp", "stable preorder preservation on N");
    c_spp->add_option("--fn", fn_arg)->required();

    auto* c_mono = app.add_subcommand("check-monomial", "monomial characterization on (N\\{0},x)");
    c_mono->add_option("--fn", fn_arg)->required();

    auto* c_lat = app.add_subcommand("lattice", "generate L_A(L) or B_A(L)");
    c_lat->add_option("--set", set_arg)->required();
    c_lat->add_option("--carrier", carrier, "N, Z or Nx");
    c_lat->add_option("--signature", signature, "add, mul or add-mul");
    c_lat->add_option("--kind", kind, "lattice or boolean");
    c_lat->add_option("--max-index", max_index);
    c_lat->add_option("--dot", dot_path, "write the Hasse diagram to this DOT file");

    auto* c_syn = app.add_subcommand("syncong", "syntactic congruence / preorder");
    c_syn->add_option("--set", set_arg, "UPSet JSON");
    c_syn->add_option("--algebra", algebra_arg, "FiniteAlgebra JSON");
    c_syn->add_option("--subset", subset_arg, "subset of the carrier as a JSON list");

    auto* c_fp = app.add_subcommand("fryingpan", "the monoid M_{a,k}");
    c_fp->add_option("--a", a)->required();
    c_fp->add_option("--k", k)->required();
    c_fp->add_flag("--dot", dot, "emit the successor digraph as DOT");
    c_fp->add_flag("--tables", tables, "include the + and x tables");

    auto* c_con = app.add_subcommand("construct", "congruence-preserving constructions");
    c_con->add_option("what", what, "e-factorial | zigzag | appendix-F | window-lift")->required();
    c_con->add_option("--max", max, "window upper end");
    c_con->add_option("--target", target_arg, "target FnTable JSON for window-lift");
    c_con->add_option("--policy", policy, "pairwise certificate policy: full | sampled");
    c_con->add_option("--samples", samples, "sample count for the sampled policy");

    auto* c_pe = app.add_subcommand("padic-extend", "evaluate the p-adic extension of a table");
    c_pe->add_option("--fn", fn_arg, "certified FnTable JSON");
    c_pe->add_option("--construct", construct, "build the table: appendix-F");
    c_pe->add_option("--max", max, "construction window upper end");
    c_pe->add_option("--p", p)->required();
    c_pe->add_option("--n", n)->required();
    c_pe->add_option("--value", value, "residue or integer to extend at");
    c_pe->add_flag("--minus-one", minus_one, "evaluate at -1");

    auto* c_vs = app.add_subcommand("verify-suite", "run the acceptance criteria");
    c_vs->add_option("--extension-precision", ext_precision,
                     "precision bound for the p-adic extension criterion (default 16)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_cp->parsed()) return cmd_check_cp(fn_arg, zp_arg);
        if (c_spp->parsed()) return cmd_check_spp(fn_arg);
        if (c_mono->parsed()) return cmd_check_monomial(fn_arg);
        if (c_lat->parsed()) return cmd_lattice(carrier, set_arg, signature, kind, max_index, dot_path);
        if (c_syn->parsed()) return cmd_syncong(set_arg, algebra_arg, subset_arg);
        if (c_fp->parsed()) return cmd_fryingpan(a, k, dot, tables);
        if (c_con->parsed()) return cmd_construct(what, max, target_arg, policy, samples);
        if (c_pe->parsed()) return cmd_padic_extend(fn_arg, construct, max, p, n, value, minus_one);
        if (c_vs->parsed()) return cmd_verify_suite(ext_precision);
    } catch (const std::domain_error& e) {
        std::cout << json{{"schema", 1}, {"error", e.what()}}.dump(2) << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cout << json{{"schema", 1}, {"error", e.what()}}.dump(2) << std::endl;
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cout << json{{"schema", 1}, {"error", e.what()}}.dump(2) << std::endl;
        return 2;
    } catch (const std::logic_error& e) {
        std::cout << json{{"schema", 1}, {"error", std::string("internal invariant violation: ") +
                                                       e.what()}}.dump(2)
                  << std::endl;
        return 3;
    }
    return 2;
}
