#include "qqs/schur.hpp"

#include <algorithm>

#include "qqs/errors.hpp"
#include "qqs/parallel.hpp"

namespace qqs {

namespace {

RatScalar vp(int k) { return RatScalar::vpow(k); }

void check_nr(int n, int r) {
    if (n < 1 || r < 0) throw ContractError("Schur algebra needs n >= 1 and r >= 0");
}

std::vector<std::vector<int>> compositions(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto& self, int i, int left) -> void {
        if (i == n - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, r);
    return out;
}

std::vector<GenSymbol> base_generators(int n) {
    std::vector<GenSymbol> gs;
    for (int i = 1; i <= n; ++i) gs.push_back({GenKind::K, i, 1});
    for (int h = 1; h < n; ++h) {
        gs.push_back({GenKind::E, h, 1});
        gs.push_back({GenKind::F, h, 1});
    }
    gs.push_back({GenKind::Kb, 1, 1});
    return gs;
}

WordCombination constant(const RatScalar& c) { return as_combination(GeneratorWord(), c); }

// K_i - v^k
WordCombination k_minus(int i, int k) { return as_combination(GeneratorWord{{GenKind::K, i, 1}}) - constant(vp(k)); }

}  // namespace

GenMatrix gen_matrix(const GenSymbol& g, int n, int r) {
    check_nr(n, r);
    GenMatrix m;
    m.basis = enumerate(n, r);
    m.columns.resize(m.basis.size());
    parallel_for(m.basis.size(), [&](std::size_t k) { m.columns[k] = act_derived(g, TensorElement::basis(m.basis[k])); });
    return m;
}

TensorElement one_r(int n, int r) {
    check_nr(n, r);
    TensorElement out;
    for (const auto& lam : compositions(n, r)) out.add(diag_matrix(lam), RatScalar(1));
    return out;
}

int WitnessFamily::index_of(const SuperMatrix& a) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), a,
                               [](const SuperMatrix& x, const SuperMatrix& y) { return total_compare(x, y) < 0; });
    if (it == basis.end() || *it != a) throw ContractError("matrix " + to_string(a) + " not in the basis");
    return static_cast<int>(it - basis.begin());
}

WitnessFamily build_witness_family(int n, int r) {
    check_nr(n, r);
    WitnessFamily fam;
    fam.n = n;
    fam.r = r;
    fam.basis = enumerate(n, r);
    const std::size_t size = fam.basis.size();
    fam.words.resize(size);
    fam.images.resize(size);
    fam.leading.resize(size);
    fam.inverse.resize(size);

    const TensorElement one = one_r(n, r);
    const auto act = tensor_action();
    parallel_for(size, [&](std::size_t k) {
        const SuperMatrix& a = fam.basis[k];
        Stripped s = strip_diag(a);
        fam.words[k] = as_combination(monomial_word(s.primed, std::vector<int>(n, 0))) * kbinom_weight(co(a));
        fam.images[k] = evaluate(fam.words[k], act, one);
    });

    for (std::size_t k = 0; k < size; ++k) {
        const SuperMatrix& a = fam.basis[k];
        for (const auto& [b, c] : fam.images[k]) {
            if (b == a) continue;
            if (co(b) != co(a) || prec(b, a).cmp != Cmp::Less)
                throw VerificationError("W_A . 1_r not triangular at A = " + to_string(a) + ", term " + to_string(b));
        }
        fam.leading[k] = fam.images[k].coeff(a);
        if (!fam.leading[k].is_signed_vpow())
            throw VerificationError("leading coefficient of W_A . 1_r is not +-v^k at A = " + to_string(a));
    }

    // Basis is sorted ascending by total_compare, which refines prec, so
    // every lower term has a smaller index and is already inverted.
    for (std::size_t k = 0; k < size; ++k) {
        SparseVec<int> inv = SparseVec<int>::basis(static_cast<int>(k));
        for (const auto& [b, c] : fam.images[k]) {
            if (b == fam.basis[k]) continue;
            inv.axpy(-c, fam.inverse[fam.index_of(b)]);
        }
        inv *= fam.leading[k].inverse();
        fam.inverse[k] = std::move(inv);
    }
    return fam;
}

int exact_rank(const std::vector<TensorElement>& vectors) {
    // Pivot rows keyed by their largest basis element.
    std::map<SuperMatrix, TensorElement> pivots;
    for (TensorElement x : vectors) {
        while (!x.is_zero()) {
            const auto& [top, c] = *x.terms().rbegin();
            auto it = pivots.find(top);
            if (it == pivots.end()) {
                TensorElement row = x;
                row *= c.inverse();
                SuperMatrix key = top;
                pivots.emplace(key, std::move(row));
                break;
            }
            x.axpy(-c, it->second);
        }
    }
    return static_cast<int>(pivots.size());
}

SchurElement psi(const WitnessFamily& fam, const SuperMatrix& a) {
    SchurElement out;
    out.n = fam.n;
    out.r = fam.r;
    out.canonical = TensorElement::basis(a);
    for (const auto& [b, c] : fam.inverse[fam.index_of(a)]) out.witness.axpy(c, fam.words[b]);
    if (evaluate(out.witness, tensor_action(), one_r(fam.n, fam.r)) != out.canonical)
        throw VerificationError("witness of psi_A does not reproduce X^[A] at A = " + to_string(a));
    return out;
}

SchurElement multiply(const SchurElement& u, const SchurElement& w) {
    if (u.n != w.n || u.r != w.r) throw ContractError("Schur elements from different algebras");
    SchurElement out;
    out.n = u.n;
    out.r = u.r;
    out.canonical = evaluate(u.witness, tensor_action(), w.canonical);
    out.witness = u.witness * w.witness;
    return out;
}

Report ideal_check(int n, int r) {
    check_nr(n, r);
    const auto basis = enumerate(n, r);
    const auto act = tensor_action();

    GeneratorWord all_k;
    for (int i = 1; i <= n; ++i) all_k.symbols.push_back({GenKind::K, i, 1});
    WordCombination weight_rel = as_combination(all_k) - constant(vp(r));

    std::vector<WordCombination> range_rel(n), odd_rel(n);
    for (int i = 1; i <= n; ++i) {
        WordCombination p = constant(RatScalar(1));
        for (int k = 1; k <= r; ++k) p = p * k_minus(i, k);
        range_rel[i - 1] = k_minus(i, 0) * p;
        odd_rel[i - 1] = as_combination(GeneratorWord{{GenKind::Kb, i, 1}}) * p;
    }

    CheckResult c1{"ideal K_1..K_n - v^r", true, 0, ""};
    CheckResult c2{"ideal prod_k (K_i - v^k)", true, 0, ""};
    CheckResult c3{"ideal Kb_i prod_k>=1 (K_i - v^k)", true, 0, ""};
    CheckResult c4{"Kb_i vanishes at weight zero", true, 0, ""};
    for (const auto& a : basis) {
        TensorElement x = TensorElement::basis(a);
        std::string at = " at " + to_string(a);
        record(c1, evaluate(weight_rel, act, x).is_zero(), "residual" + at);
        auto w = ro(a);
        for (int i = 1; i <= n; ++i) {
            std::string ati = " i=" + std::to_string(i) + at;
            record(c2, evaluate(range_rel[i - 1], act, x).is_zero(), "residual" + ati);
            record(c3, evaluate(odd_rel[i - 1], act, x).is_zero(), "residual" + ati);
            if (w[i - 1] == 0) record(c4, act({GenKind::Kb, i, 1}, x).is_zero(), "nonzero" + ati);
        }
    }
    return Report{{c1, c2, c3, c4}};
}

Report integrality_check(int n, int r) {
    check_nr(n, r);
    CheckResult c{"generator matrices are Laurent", true, 0, ""};
    for (const GenSymbol& g : base_generators(n)) {
        GenMatrix m = gen_matrix(g, n, r);
        for (std::size_t k = 0; k < m.basis.size(); ++k)
            for (const auto& [b, s] : m.columns[k])
                record(c, s.is_laurent(), to_string(g) + " entry (" + to_string(b) + ", " + to_string(m.basis[k]) + ") = " + to_string(s));
    }
    return Report{{c}};
}

Report schur_verify(int n, int r) {
    check_nr(n, r);
    Report rep;
    CheckResult tri{"witness family triangular", true, 0, ""};
    CheckResult dim{"rank equals |M_n(N|Z_2)_r|", true, 0, ""};
    CheckResult ps{"psi_A witnesses reproduce X^[A]", true, 0, ""};
    CheckResult idem{"weight idempotents", true, 0, ""};
    WitnessFamily fam;
    try {
        fam = build_witness_family(n, r);
        tri.checked = static_cast<long>(fam.basis.size());
    } catch (const VerificationError& e) {
        record(tri, false, e.what());
        rep.checks = {tri};
        return rep;
    }
    // Rank per column-sum block, where the family is square.
    std::map<std::vector<int>, std::vector<TensorElement>> blocks;
    for (std::size_t k = 0; k < fam.basis.size(); ++k) blocks[co(fam.basis[k])].push_back(fam.images[k]);
    int rank = 0;
    for (const auto& [lam, vs] : blocks) rank += exact_rank(vs);
    record(dim, rank == static_cast<int>(fam.basis.size()),
           "rank " + std::to_string(rank) + " vs " + std::to_string(fam.basis.size()));
    dim.detail = dim.pass ? "dim = " + std::to_string(rank) : dim.detail;

    std::vector<char> ok(fam.basis.size(), 1);
    parallel_for(fam.basis.size(), [&](std::size_t k) {
        try {
            psi(fam, fam.basis[k]);
        } catch (const VerificationError&) {
            ok[k] = 0;
        }
    });
    for (std::size_t k = 0; k < fam.basis.size(); ++k) record(ps, ok[k] != 0, "A = " + to_string(fam.basis[k]));

    // psi(diag l) psi(diag m) = delta_{l,m} psi(diag l), and they sum to 1.
    auto comps = compositions(n, r);
    std::vector<SchurElement> ids;
    for (const auto& l : comps) ids.push_back(psi(fam, diag_matrix(l)));
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = 0; b < ids.size(); ++b) {
            TensorElement want = a == b ? ids[a].canonical : TensorElement();
            record(idem, multiply(ids[a], ids[b]).canonical == want, "pair " + std::to_string(a) + "," + std::to_string(b));
        }
    WordCombination unit;
    for (const auto& e : ids) unit += e.witness;
    const auto act = tensor_action();
    for (const auto& a : fam.basis)
        record(idem, evaluate(unit, act, TensorElement::basis(a)) == TensorElement::basis(a), "sum at " + to_string(a));

    rep.checks = {tri, dim, ps, idem};
    return rep;
}

}  // namespace qqs
