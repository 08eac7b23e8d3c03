#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "qqs/diffops.hpp"
#include "qqs/jsonio.hpp"
#include "qqs/schur.hpp"
#include "qqs/suites.hpp"

using namespace qqs;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
    using Error::Error;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// One array entry per line so outputs diff cleanly.
void print_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) std::cout << " " << j[k].dump() << (k + 1 < j.size() ? ",\n" : "\n");
    std::cout << "]\n";
}

int print_report(const Report& rep) {
    std::cout << rep.to_text();
    std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
    return rep.pass() ? kPass : kFail;
}

int schur_dim(int n, int r) {
    WitnessFamily fam = build_witness_family(n, r);
    std::map<std::vector<int>, std::vector<TensorElement>> blocks;
    for (std::size_t k = 0; k < fam.basis.size(); ++k) blocks[co(fam.basis[k])].push_back(fam.images[k]);
    int rank = 0;
    for (const auto& [lam, vs] : blocks) rank += exact_rank(vs);
    std::cout << rank << "\n";
    return rank == static_cast<int>(fam.basis.size()) ? kPass : kFail;
}

json act_on(const std::string& space, const GenSymbol& g, const json& elem) {
    if (space == "apoly") return to_json(act_closed(g, qpoly_from_json(elem)));
    if (space == "tensor") return to_json(act_derived(g, tensor_from_json(elem)));
    if (space == "vmod") return to_json(act_derived(g, velement_from_json(elem)));
    throw UsageError("unknown space " + space);
}

json dump_basis(const std::string& space, int n, int maxdeg) {
    json out = json::array();
    if (space == "apoly") {
        for (const auto& a : qpoly_basis(n, maxdeg)) out.push_back({{"even", a.even}, {"odd", a.odd}});
    } else if (space == "tensor") {
        for (int d = 0; d <= maxdeg; ++d)
            for (const auto& a : enumerate(n, d)) out.push_back(to_json(a));
    } else if (space == "schur") {
        for (const auto& a : enumerate(n, maxdeg)) out.push_back(to_json(a));
    } else if (space == "vmod") {
        for (const auto& a : enumerate_primed_upto(n, maxdeg)) out.push_back(to_json(a));
    } else {
        throw UsageError("unknown space " + space);
    }
    return out;
}

std::vector<GenSymbol> schur_generators(int n) {
    std::vector<GenSymbol> gs;
    for (int i = 1; i <= n; ++i) gs.push_back({GenKind::K, i, 1});
    for (int h = 1; h < n; ++h) {
        gs.push_back({GenKind::E, h, 1});
        gs.push_back({GenKind::F, h, 1});
    }
    gs.push_back({GenKind::Kb, 1, 1});
    return gs;
}

int schur_gens(int n, int r, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const GenSymbol& g : schur_generators(n)) {
        GenMatrix m = gen_matrix(g, n, r);
        json j = {{"generator", to_string(g)}, {"n", n}, {"r", r}, {"basis", json::array()}, {"columns", json::array()}};
        for (std::size_t k = 0; k < m.basis.size(); ++k) {
            j["basis"].push_back(to_json(m.basis[k]));
            j["columns"].push_back(to_json(m.columns[k]));
        }
        std::string path = (std::filesystem::path(dir) / (to_string(g) + ".json")).string();
        std::ofstream out(path);
        if (!out) throw UsageError("cannot write " + path);
        out << j.dump(1) << "\n";
        std::cout << path << "\n";
    }
    return kPass;
}

int schur_mult(const std::string& a_path, const std::string& b_path) {
    SuperMatrix a = matrix_from_json(read_json(a_path));
    SuperMatrix b = matrix_from_json(read_json(b_path));
    if (a.n != b.n || a.degree() != b.degree()) throw UsageError("matrices must share n and degree");
    if (!a.nonnegative() || !a.reduced() || !b.nonnegative() || !b.reduced()) throw UsageError("matrices must lie in M_n(N|Z_2)");
    WitnessFamily fam = build_witness_family(a.n, a.degree());
    SchurElement p = multiply(psi(fam, a), psi(fam, b));
    print_json(to_json(p.canonical));
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations and verification suites for the quantum queer supergroup"};
    app.require_subcommand(1);

    int n = 2;
    int maxdeg = 3;
    int r = 2;
    int extra = 4;
    std::string space = "apoly";
    std::string gen;
    std::string elem;
    std::string a_path;
    std::string b_path;
    std::string out_dir;
    std::function<int()> job;

    auto add_n = [&](CLI::App* s) { s->add_option("--n", n, "rank n")->check(CLI::Range(1, 4)); };
    auto add_deg = [&](CLI::App* s) { s->add_option("--maxdeg", maxdeg, "maximal degree")->check(CLI::Range(0, 8)); };
    auto add_r = [&](CLI::App* s) { s->add_option("--r", r, "tensor degree r")->required()->check(CLI::Range(0, 8)); };
    auto add_elem = [&](CLI::App* s) { s->add_option("--elem", elem, "JSON element file")->required()->check(CLI::ExistingFile); };

    auto* relcheck = app.add_subcommand("relcheck", "defining relations on a representation");
    add_n(relcheck);
    add_deg(relcheck);
    relcheck->add_option("--space", space, "apoly, tensor or schur (maxdeg is r)")
        ->check(CLI::IsMember({"apoly", "tensor", "schur"}));
    relcheck->callback([&] {
        job = [&] {
            if (space == "apoly") return print_report(relcheck_apoly(n, maxdeg));
            if (space == "tensor") return print_report(relcheck_tensor(n, maxdeg));
            return print_report(relcheck_schur(n, maxdeg));
        };
    });

    auto* opecom = app.add_subcommand("opecom", "commutation identities of the v-differential operators");
    add_n(opecom);
    add_deg(opecom);
    opecom->callback([&] { job = [&] { return print_report(verify_opecom(n, maxdeg)); }; });

    auto* oracle = app.add_subcommand("oracle", "closed tensor action against the comultiplication oracle");
    add_n(oracle);
    add_deg(oracle);
    oracle->callback([&] { job = [&] { return print_report(oracle_suite(n, maxdeg)); }; });

    auto* vverify = app.add_subcommand("vmod-verify", "truncation equivariance and triangularity on V_v(n)");
    add_n(vverify);
    add_deg(vverify);
    vverify->add_option("--extra", extra, "truncation depth beyond deg(A)")->check(CLI::Range(0, 6));
    vverify->callback([&] {
        job = [&] {
            Report rep = vmod_dictionary_suite(n);
            rep.merge(vmod_truncation_suite(n, maxdeg, extra));
            rep.merge(vmod_triangularity_suite(n, maxdeg));
            return print_report(rep);
        };
    });

    auto* sverify = app.add_subcommand("schur-verify", "dimension, triangularity, ideal and integrality on Q_v(n,r)");
    add_n(sverify);
    add_r(sverify);
    sverify->callback([&] {
        job = [&] {
            Report rep = schur_verify(n, r);
            rep.merge(ideal_check(n, r));
            rep.merge(integrality_check(n, r));
            return print_report(rep);
        };
    });

    auto* sdim = app.add_subcommand("schur-dim", "rank of the witness family of Q_v(n,r)");
    add_n(sdim);
    add_r(sdim);
    sdim->callback([&] { job = [&] { return schur_dim(n, r); }; });

    auto* sgens = app.add_subcommand("schur-gens", "write generator matrices of Q_v(n,r) as JSON");
    add_n(sgens);
    add_r(sgens);
    sgens->add_option("--out", out_dir, "output directory")->required();
    sgens->callback([&] { job = [&] { return schur_gens(n, r, out_dir); }; });

    for (const char* name : {"mult", "schur-mult"}) {
        auto* mult = app.add_subcommand(name, "product psi_A psi_B applied to 1_r");
        mult->add_option("--a", a_path, "matrix JSON")->required()->check(CLI::ExistingFile);
        mult->add_option("--b", b_path, "matrix JSON")->required()->check(CLI::ExistingFile);
        mult->callback([&] { job = [&] { return schur_mult(a_path, b_path); }; });
    }

    auto* actc = app.add_subcommand("act", "apply a generator to an element");
    actc->add_option("--gen", gen, "generator, e.g. E1^(2) or Kb1")->required();
    actc->add_option("--space", space, "apoly, tensor or vmod")->check(CLI::IsMember({"apoly", "tensor", "vmod"}));
    add_elem(actc);
    actc->callback([&] {
        job = [&] {
            print_json(act_on(space, parse_gen(gen), read_json(elem)));
            return kPass;
        };
    });

    auto* vact = app.add_subcommand("vmod-act", "apply a generator to an element of V_v(n)");
    vact->add_option("--gen", gen, "generator")->required();
    add_elem(vact);
    vact->callback([&] {
        job = [&] {
            print_json(act_on("vmod", parse_gen(gen), read_json(elem)));
            return kPass;
        };
    });

    auto* vlead = app.add_subcommand("vmod-lead", "leading term of an element of V_v(n)");
    add_elem(vlead);
    vlead->callback([&] {
        job = [&] {
            LeadingTerm lt = leading_term(velement_from_json(read_json(elem)));
            json j = {{"matrix", to_json(lt.a)}, {"j", lt.j}, {"coeff", to_json(lt.coeff)}};
            print_json(j);
            return kPass;
        };
    });

    auto* vtrunc = app.add_subcommand("vmod-truncate", "truncate an element of V_v(n) into the tensor space");
    add_elem(vtrunc);
    vtrunc->add_option("--rmax", maxdeg, "maximal degree")->required()->check(CLI::Range(0, 8));
    vtrunc->callback([&] {
        job = [&] {
            print_json(to_json(truncate(velement_from_json(read_json(elem)), maxdeg)));
            return kPass;
        };
    });

    auto* dump = app.add_subcommand("dump-basis", "list basis indices as JSON");
    add_n(dump);
    add_deg(dump);
    dump->add_option("--space", space, "apoly, tensor, schur (maxdeg is r) or vmod")
        ->check(CLI::IsMember({"apoly", "tensor", "schur", "vmod"}));
    dump->callback([&] {
        job = [&] {
            print_json(dump_basis(space, n, maxdeg));
            return kPass;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        return job();
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kFail;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ContractError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
