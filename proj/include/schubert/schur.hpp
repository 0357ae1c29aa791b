#pragma once

#include <functional>
#include <vector>

#include "schubert/combinat.hpp"
#include "schubert/poly.hpp"

namespace schubert {

struct ShapeTooLong : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// First n variables of a single-indexed family.
struct Alphabet {
    Family family = Family::X;
    int size = 0;
    std::vector<Polynomial> vars() const;
    Alphabet prefix(int k) const { return Alphabet{family, k < 0 ? 0 : k}; }
};

Polynomial elementary(int r, const std::vector<Polynomial>& alphabet);
Polynomial complete(int r, const std::vector<Polynomial>& alphabet);
Polynomial elementary(int r, const Alphabet& a);
Polynomial complete(int r, const Alphabet& a);

enum class SchurMethod { Alternant, JacobiTrudi, NaegelsbachKostka, FlaggedH, FlaggedE };
const std::vector<SchurMethod>& all_schur_methods();
const char* method_name(SchurMethod m);

Polynomial schur(const Partition& lambda, const Alphabet& a, SchurMethod method = SchurMethod::JacobiTrudi);

// Both sides of the dual Cauchy identity over X_n and Y_m.
Polynomial cauchy_lhs(int n, int m);
Polynomial cauchy_rhs(int n, int m);
CheckResult cauchy_check(int n, int m);

// s_k for k >= 0 with s_0 = 1 and s_k = 0 for k < 0.
class CoefficientSequence {
public:
    explicit CoefficientSequence(std::function<Polynomial(int)> rule) : rule_(std::move(rule)) {}
    Polynomial operator()(int k) const;

private:
    std::function<Polynomial(int)> rule_;
};

// Power series quotient num/den truncated at max_degree; den(0) must be 1.
std::vector<Polynomial> series_divide(const std::vector<Polynomial>& num, const std::vector<Polynomial>& den, int max_degree);
// Series with generating function prod(1 - z y) / prod(1 - z x).
CoefficientSequence super_series(const std::vector<Polynomial>& xs, const std::vector<Polynomial>& ys, int max_degree);

// det(s_{lambda_i - mu_j - i + j}).
Polynomial generalized_schur(const CoefficientSequence& f, const Partition& lambda, const Partition& mu = {});

// Shift automorphism phi^k on h-symbols.
Polynomial phi(const Polynomial& f, int k);

enum class NinthForm { HDet, EDet, Giambelli };
// e_r(h) = s_{(1^r)}(h), expanded in h-symbols.
Polynomial ninth_e(int r);
// Determinant of the h-form for arbitrary lambda, mu (no containment check).
Polynomial ninth_h_det(const Partition& lambda, const Partition& mu);
Polynomial ninth_e_det(const Partition& lambda, const Partition& mu);
Polynomial ninth_giambelli(const Partition& lambda);
Polynomial ninth_variation(const Partition& lambda, const Partition& mu, NinthForm form, int shift = 0);

}  // namespace schubert
