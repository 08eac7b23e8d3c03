#pragma once

#include "qqs/report.hpp"

namespace qqs {

// Exhaustive verification suites shared by the acceptance runner and qcli.
// Work is spread over QQS_THREADS workers; reports are deterministic.

/// QQ1-QQ6 on every basis monomial of A_v(n) up to maxdeg, closed-form action.
Report relcheck_apoly(int n, int maxdeg);

/// QQ1-QQ6 on every X^{[A]} of T_v(n, r') for r' <= maxdeg, derived odd
/// generators included.
Report relcheck_tensor(int n, int maxdeg);

/// QQ1-QQ6 on every X^{[A]} of T_v(n, r) through the generator matrices.
Report relcheck_schur(int n, int r);

/// Closed-form tensor action against the comultiplication oracle for
/// K_i^{+-1}, E_h^{(m)}, F_h^{(m)} (m <= 2) and Kb_1, degrees <= maxdeg.
Report oracle_suite(int n, int maxdeg);

/// truncate(g . A(j)) = g . truncate(A(j)) at depth deg(A) + extra, for
/// every primed reduced A up to maxdeg and j in {-1, 0, 1}^n.
Report vmod_truncation_suite(int n, int maxdeg, int extra = 4);

/// Leading term of m^{A,0} . O(0) is A with coefficient in +-v^Z.
Report vmod_triangularity_suite(int n, int maxdeg);

/// E_i, F_i, K_i, Kb_1 on O(0).
Report vmod_dictionary_suite(int n);

/// Rank of the witness family equals |M_n(N|Z_2)_r| for every r' <= rmax,
/// together with triangularity.
Report schur_dimension_suite(int n, int rmax);

/// Ideal annihilation for every r' <= rmax.
Report schur_ideal_suite(int n, int rmax);

/// Quantum integers at v = 1, the odd square coefficient at v = 1, and
/// preservation of degree, parity, weight and column sums by every action
/// on A_v(n) and T_v(n, r') for r' <= maxdeg.
Report specialization_suite(int n, int maxdeg);

}  // namespace qqs
