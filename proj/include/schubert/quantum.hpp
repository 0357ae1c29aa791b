#pragma once

#include <vector>

#include "schubert/combinat.hpp"
#include "schubert/poly.hpp"

namespace schubert {

struct AlphabetOverflow : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Variables x_1..x_n of one family with deformation parameters of another.
struct QAlphabet {
    Family base = Family::X;
    Family param = Family::Q;
    bool deformed = true;

    Polynomial var(int i) const { return symbol(base, i); }
    Polynomial parameter(int i) const { return deformed && i >= 1 ? symbol(param, i) : Polynomial(); }
    QAlphabet classical() const { return QAlphabet{base, param, false}; }
};

inline const QAlphabet kXq{Family::X, Family::Q, true};

enum class HVariant {
    Definition,  // alphabets X_{r-1+j}, rejected past n
    Capped       // alphabets X_{min(r-1+j, n-1)}
};

// e_i^q(X_k) and h_k^q(X_r) over ambient rank n, precomputed once.
class QuantumTable {
public:
    QuantumTable(const QAlphabet& a, int n);

    int rank() const { return n_; }
    const QAlphabet& alphabet() const { return a_; }
    // e_i^q(X_k); X_k for k <= 0 is empty.
    Polynomial e(int i, int k) const;
    Polynomial h(int k, int r, HVariant v = HVariant::Definition) const;

private:
    QAlphabet a_;
    int n_;
    std::vector<std::vector<Polynomial>> e_;
};

Polynomial e_q(int i, int k, int n, const QAlphabet& a = kXq);
Polynomial h_q(int k, int r, int n, const QAlphabet& a = kXq, HVariant v = HVariant::Definition);

// Coefficient of t^{k-i} of the tridiagonal determinant, expanded row by row.
std::vector<Polynomial> givental_kim_coefficients(int k, const QAlphabet& a);

// Right-hand side of the inversion formula with h from the given variant.
Polynomial inversion_rhs(const QuantumTable& tab, int k, int r, HVariant v = HVariant::Definition);
CheckResult inversion_check(int k, int r, int n);
// Compares the capped determinant against the definition.
CheckResult capped_check(int k, int r, int n);

// Super polynomials over X_k - Y_l with deformations (q, q').
Polynomial super_h(int m, int k, int l, const QuantumTable& xt, const QuantumTable& yt, HVariant v = HVariant::Definition);
Polynomial super_e(int m, int k, int l, const QuantumTable& xt, const QuantumTable& yt, HVariant v = HVariant::Definition);
CheckResult duality_check(int m, int k, int l, int n);

// Semi-universal polynomials mixing c or d symbols with quantum ones.
Polynomial semi_universal_e(int m, int k, int l, const QuantumTable& yt, HVariant v = HVariant::Definition);
Polynomial semi_universal_h(int m, int r, int l, const QuantumTable& xt, HVariant v = HVariant::Definition);

struct Flag {
    int k = 0;
    int l = 0;
};
Polynomial quantum_super_multi_schur(const Partition& lambda, const Partition& mu, const std::vector<Flag>& flags,
                                     const QuantumTable& xt, const QuantumTable& yt);

// c_i(j) -> e_i^q(X_j) for all symbols with j <= n.
Assignment c_to_quantum(Family c_family, const QuantumTable& tab);

}  // namespace schubert
