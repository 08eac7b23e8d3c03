#include "qqs/suites.hpp"

#include <map>
#include <optional>

#include "qqs/diffops.hpp"
#include "qqs/parallel.hpp"
#include "qqs/schur.hpp"
#include "qqs/vmod.hpp"

namespace qqs {

namespace {

using Probe = std::function<std::optional<std::string>(std::size_t)>;

// Runs probe(i) for every i in parallel; a returned string is a failure locus.
CheckResult run_checks(const std::string& name, std::size_t count, const Probe& probe) {
    std::vector<std::optional<std::string>> out(count);
    parallel_for(count, [&](std::size_t i) {
        try {
            out[i] = probe(i);
        } catch (const Error& e) {
            out[i] = std::string("error: ") + e.what();
        }
    });
    CheckResult r{name, true, 0, ""};
    for (const auto& o : out) record(r, !o.has_value(), o.value_or(""));
    return r;
}

std::string family(const Relation& r) { return r.id.substr(0, 3); }

template <class Key>
Report relation_suite(const std::string& space, int n, const std::vector<Key>& basis, const Action<Key>& act,
                      const std::function<std::string(const Key&)>& name) {
    auto rels = relations(n);
    std::map<std::string, std::vector<std::size_t>> fams;
    for (std::size_t k = 0; k < rels.size(); ++k) fams[family(rels[k])].push_back(k);
    Report rep;
    for (const auto& [fam, ids] : fams) {
        std::size_t per = basis.size();
        rep.checks.push_back(run_checks(fam + " on " + space + " n=" + std::to_string(n), ids.size() * per,
                                        [&](std::size_t i) -> std::optional<std::string> {
                                            const Relation& rel = rels[ids[i / per]];
                                            const Key& b = basis[i % per];
                                            if (relation_residual(rel, act, SparseVec<Key>::basis(b)).is_zero()) return {};
                                            return rel.id + " at " + name(b);
                                        }));
    }
    return rep;
}

std::vector<SuperMatrix> tensor_basis_upto(int n, int maxdeg) {
    std::vector<SuperMatrix> out;
    for (int d = 0; d <= maxdeg; ++d)
        for (auto& a : enumerate(n, d)) out.push_back(std::move(a));
    return out;
}

std::vector<GenSymbol> closed_generators(int n, int max_power) {
    std::vector<GenSymbol> gs;
    for (int i = 1; i <= n; ++i) {
        gs.push_back({GenKind::K, i, 1});
        gs.push_back({GenKind::Kinv, i, 1});
    }
    for (int h = 1; h < n; ++h)
        for (int m = 1; m <= max_power; ++m) {
            gs.push_back({GenKind::E, h, m});
            gs.push_back({GenKind::F, h, m});
        }
    gs.push_back({GenKind::Kb, 1, 1});
    return gs;
}

std::vector<GenSymbol> all_generators(int n) {
    std::vector<GenSymbol> gs = closed_generators(n, 1);
    for (int i = 2; i <= n; ++i) gs.push_back({GenKind::Kb, i, 1});
    for (int h = 1; h < n; ++h) {
        gs.push_back({GenKind::Eb, h, 1});
        gs.push_back({GenKind::Fb, h, 1});
    }
    return gs;
}

// Change of the row-sum weight under g.
std::vector<int> weight_shift(int n, const GenSymbol& g) {
    std::vector<int> d(n, 0);
    if (g.kind == GenKind::E || g.kind == GenKind::Eb) {
        d[g.index - 1] = g.power;
        d[g.index] = -g.power;
    } else if (g.kind == GenKind::F || g.kind == GenKind::Fb) {
        d[g.index - 1] = -g.power;
        d[g.index] = g.power;
    }
    return d;
}

std::vector<int> plus(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<int> poly_weight(const SuperIndex& a) { return plus(a.even, a.odd); }

void check_n(int n) {
    if (n < 1 || n > 4) throw ContractError("n must be in 1..4");
}

}  // namespace

Report relcheck_apoly(int n, int maxdeg) {
    check_n(n);
    Action<SuperIndex> act = [](const GenSymbol& g, const QPolyElement& x) { return act_closed(g, x); };
    return relation_suite<SuperIndex>("A_v", n, qpoly_basis(n, maxdeg), act,
                                      [](const SuperIndex& a) { return to_string(a); });
}

Report relcheck_tensor(int n, int maxdeg) {
    check_n(n);
    return relation_suite<SuperMatrix>("T_v", n, tensor_basis_upto(n, maxdeg), tensor_action(),
                                       [](const SuperMatrix& a) { return to_string(a); });
}

Report relcheck_schur(int n, int r) {
    check_n(n);
    // Generator matrices for every generator symbol a relation can mention.
    std::map<GenSymbol, GenMatrix> mats;
    std::map<SuperMatrix, std::size_t> pos;
    for (const Relation& rel : relations(n))
        for (const auto& [w, c] : rel.residual)
            for (const GenSymbol& g : w.symbols)
                if (!mats.count(g)) mats.emplace(g, gen_matrix(g, n, r));
    auto basis = enumerate(n, r);
    for (std::size_t k = 0; k < basis.size(); ++k) pos[basis[k]] = k;
    Action<SuperMatrix> act = [&](const GenSymbol& g, const TensorElement& x) {
        const GenMatrix& m = mats.at(g);
        TensorElement out;
        for (const auto& [a, c] : x) out.axpy(c, m.columns[pos.at(a)]);
        return out;
    };
    return relation_suite<SuperMatrix>("Q_v r=" + std::to_string(r), n, basis, act,
                                       [](const SuperMatrix& a) { return to_string(a); });
}

Report oracle_suite(int n, int maxdeg) {
    check_n(n);
    auto basis = tensor_basis_upto(n, maxdeg);
    auto gens = closed_generators(n, 2);
    Report rep;
    rep.checks.push_back(run_checks("closed action = comultiplication oracle n=" + std::to_string(n), basis.size() * gens.size(),
                                    [&](std::size_t i) -> std::optional<std::string> {
                                        const GenSymbol& g = gens[i % gens.size()];
                                        TensorElement x = TensorElement::basis(basis[i / gens.size()]);
                                        if (act_closed(g, x) == act_oracle(g, x)) return {};
                                        return to_string(g) + " on " + to_string(basis[i / gens.size()]);
                                    }));
    return rep;
}

Report vmod_truncation_suite(int n, int maxdeg, int extra) {
    check_n(n);
    auto mats = enumerate_primed_upto(n, maxdeg);
    std::vector<std::vector<int>> shifts{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& s : shifts)
            for (int v = -1; v <= 1; ++v) {
                auto t = s;
                t.push_back(v);
                next.push_back(t);
            }
        shifts = std::move(next);
    }
    auto gens = closed_generators(n, 2);
    std::size_t per = shifts.size() * gens.size();
    Report rep;
    rep.checks.push_back(run_checks("truncation equivariance on V_v n=" + std::to_string(n), mats.size() * per,
                                    [&](std::size_t i) -> std::optional<std::string> {
                                        const SuperMatrix& a = mats[i / per];
                                        const auto& j = shifts[(i % per) / gens.size()];
                                        const GenSymbol& g = gens[i % gens.size()];
                                        VElement x = symbol(a, j);
                                        int depth = a.degree() + extra;
                                        if (truncate(act(g, x), depth) == act_closed(g, truncate(x, depth))) return {};
                                        return to_string(g) + " on " + to_string(VKey{a, j});
                                    }));
    return rep;
}

Report vmod_triangularity_suite(int n, int maxdeg) {
    check_n(n);
    auto mats = enumerate_primed_upto(n, maxdeg);
    Report rep;
    rep.checks.push_back(run_checks("monomial images triangular n=" + std::to_string(n), mats.size(),
                                    [&](std::size_t i) -> std::optional<std::string> {
                                        const SuperMatrix& a = mats[i];
                                        VElement img = monomial_image(a, std::vector<int>(n, 0));
                                        if (img.is_zero()) return "zero image at " + to_string(a);
                                        LeadingTerm lt = leading_term(img);
                                        if (lt.a != a) return "leading matrix " + to_string(lt.a) + " at " + to_string(a);
                                        if (!lt.coeff.is_signed_vpow()) return "leading coefficient " + to_string(lt.coeff) + " at " + to_string(a);
                                        int hits = 0;
                                        for (const auto& [k, c] : img)
                                            if (k.a == a) ++hits;
                                        if (hits != 1) return "several j at the leading matrix " + to_string(a);
                                        return {};
                                    }));
    return rep;
}

Report vmod_dictionary_suite(int n) {
    check_n(n);
    const std::vector<int> zero(n, 0);
    VElement o = zero_symbol(n, zero);
    std::vector<std::pair<GenSymbol, VElement>> cases;
    for (int i = 1; i <= n; ++i) {
        auto ei = zero;
        ei[i - 1] = 1;
        cases.push_back({{GenKind::K, i, 1}, zero_symbol(n, ei)});
    }
    for (int i = 1; i < n; ++i) {
        SuperMatrix e(n), f(n);
        e.e(i, i + 1) = 1;
        f.e(i + 1, i) = 1;
        cases.push_back({{GenKind::E, i, 1}, symbol(e, zero)});
        cases.push_back({{GenKind::F, i, 1}, symbol(f, zero)});
    }
    SuperMatrix kb(n);
    kb.o(1, 1) = 1;
    cases.push_back({{GenKind::Kb, 1, 1}, symbol(kb, zero)});
    Report rep;
    rep.checks.push_back(run_checks("generator images of O(0) n=" + std::to_string(n), cases.size(),
                                    [&](std::size_t i) -> std::optional<std::string> {
                                        if (act(cases[i].first, o) == cases[i].second) return {};
                                        return to_string(cases[i].first) + " . O(0)";
                                    }));
    return rep;
}

Report schur_dimension_suite(int n, int rmax) {
    check_n(n);
    Report rep;
    for (int r = 0; r <= rmax; ++r) {
        Report one = schur_verify(n, r);
        for (auto& c : one.checks) c.name += " n=" + std::to_string(n) + " r=" + std::to_string(r);
        rep.merge(one);
    }
    return rep;
}

Report schur_ideal_suite(int n, int rmax) {
    check_n(n);
    Report rep;
    for (int r = 0; r <= rmax; ++r) {
        Report one = ideal_check(n, r);
        for (auto& c : one.checks) c.name += " n=" + std::to_string(n) + " r=" + std::to_string(r);
        rep.merge(one);
    }
    return rep;
}

Report specialization_suite(int n, int maxdeg) {
    check_n(n);
    Report rep;
    CheckResult ints{"quantum integers at v=1", true, 0, ""};
    for (int c = -6; c <= 6; ++c) record(ints, specialize_v1(RatScalar(qint(c))) == c, "[" + std::to_string(c) + "]");
    for (int c = 0; c <= 6; ++c) {
        mpz_class binom = 1;
        for (int t = 0; t <= c; ++t) {
            record(ints, specialize_v1(RatScalar(qbinom(c, t))) == binom, "[" + std::to_string(c) + " over " + std::to_string(t) + "]");
            binom = binom * (c - t) / (t + 1);
        }
    }
    record(ints, specialize_v1(odd_square_coeff()) == 0, "odd square coefficient");
    rep.checks.push_back(ints);

    auto gens = all_generators(n);
    auto pbasis = qpoly_basis(n, maxdeg);
    rep.checks.push_back(run_checks("gradings preserved on A_v n=" + std::to_string(n), pbasis.size() * gens.size(),
                                    [&](std::size_t i) -> std::optional<std::string> {
                                        const GenSymbol& g = gens[i % gens.size()];
                                        const SuperIndex& a = pbasis[i / gens.size()];
                                        for (const auto& [b, c] : act_closed(g, QPolyElement::basis(a))) {
                                            bool ok = b.degree() == a.degree() && b.parity() == (a.parity() ^ int(g.odd())) &&
                                                      poly_weight(b) == plus(poly_weight(a), weight_shift(n, g));
                                            if (!ok) return to_string(g) + " on " + to_string(a);
                                        }
                                        return {};
                                    }));
    auto tbasis = tensor_basis_upto(n, maxdeg);
    rep.checks.push_back(run_checks("gradings preserved on T_v n=" + std::to_string(n), tbasis.size() * gens.size(),
                                    [&](std::size_t i) -> std::optional<std::string> {
                                        const GenSymbol& g = gens[i % gens.size()];
                                        const SuperMatrix& a = tbasis[i / gens.size()];
                                        for (const auto& [b, c] : act_derived(g, TensorElement::basis(a))) {
                                            bool ok = b.degree() == a.degree() && b.parity() == (a.parity() ^ int(g.odd())) &&
                                                      co(b) == co(a) && ro(b) == plus(ro(a), weight_shift(n, g));
                                            if (!ok) return to_string(g) + " on " + to_string(a);
                                        }
                                        return {};
                                    }));
    return rep;
}

}  // namespace qqs
