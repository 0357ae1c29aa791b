#include "schubert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace schubert {

namespace {

constexpr int kIndexOffset = 8192;
constexpr int kIndexLimit = 8191;

const char* const kNames[] = {"x", "y", "z", "q", "qp", "qpp", "c", "d", "b", "t", "g", "h"};

std::uint64_t pack(std::uint32_t key, unsigned e) {
    return (static_cast<std::uint64_t>(key) << 32) | e;
}
std::uint32_t key_of(std::uint64_t p) { return static_cast<std::uint32_t>(p >> 32); }
unsigned exp_of(std::uint64_t p) { return static_cast<unsigned>(p & 0xffffffffu); }

}  // namespace

const char* family_name(Family f) { return kNames[static_cast<int>(f)]; }

bool family_is_double_indexed(Family f) { return f >= Family::C; }

std::uint32_t Var::key() const {
    if (i < -kIndexOffset || i > kIndexLimit || j < -kIndexOffset || j > kIndexLimit)
        throw InvalidVariable("variable index out of range");
    return (static_cast<std::uint32_t>(family) << 28) |
           (static_cast<std::uint32_t>(i + kIndexOffset) << 14) |
           static_cast<std::uint32_t>(j + kIndexOffset);
}

Var Var::from_key(std::uint32_t k) {
    Var v;
    v.family = static_cast<Family>(k >> 28);
    v.i = static_cast<int>((k >> 14) & 0x3fffu) - kIndexOffset;
    v.j = static_cast<int>(k & 0x3fffu) - kIndexOffset;
    return v;
}

int Var::weight() const {
    switch (family) {
        case Family::X:
        case Family::Y:
        case Family::Z:
            return 1;
        case Family::Q:
        case Family::QP:
        case Family::QPP:
        case Family::T:
            return 2;
        case Family::C:
        case Family::D:
        case Family::B:
        case Family::H:
            return i;
        case Family::G:
            return j + 1;
    }
    return 0;
}

std::string Var::str() const {
    std::string s = family_name(family);
    if (family_is_double_indexed(family))
        return s + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    return s + std::to_string(i);
}

Monomial Monomial::of(const Var& v, unsigned e) {
    if (e == 0) return Monomial();
    return Monomial({pack(v.key(), e)});
}

unsigned Monomial::exponent_of(const Var& v) const {
    const std::uint32_t k = v.key();
    for (auto p : f_)
        if (key_of(p) == k) return exp_of(p);
    return 0;
}

int Monomial::weight() const {
    int w = 0;
    for (auto p : f_) w += Var::from_key(key_of(p)).weight() * static_cast<int>(exp_of(p));
    return w;
}

unsigned Monomial::total_degree() const {
    unsigned s = 0;
    for (auto p : f_) s += exp_of(p);
    return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::uint64_t> r;
    r.reserve(f_.size() + o.f_.size());
    std::size_t a = 0, b = 0;
    while (a < f_.size() && b < o.f_.size()) {
        const auto ka = key_of(f_[a]), kb = key_of(o.f_[b]);
        if (ka == kb) {
            r.push_back(pack(ka, exp_of(f_[a]) + exp_of(o.f_[b])));
            ++a;
            ++b;
        } else if (ka < kb) {
            r.push_back(f_[a++]);
        } else {
            r.push_back(o.f_[b++]);
        }
    }
    while (a < f_.size()) r.push_back(f_[a++]);
    while (b < o.f_.size()) r.push_back(o.f_[b++]);
    return Monomial(std::move(r));
}

bool Monomial::divide(const Monomial& o, Monomial& out) const {
    std::vector<std::uint64_t> r;
    std::size_t a = 0, b = 0;
    while (b < o.f_.size()) {
        if (a == f_.size()) return false;
        const auto ka = key_of(f_[a]), kb = key_of(o.f_[b]);
        if (ka < kb) {
            r.push_back(f_[a++]);
        } else if (ka == kb) {
            const unsigned ea = exp_of(f_[a]), eb = exp_of(o.f_[b]);
            if (ea < eb) return false;
            if (ea > eb) r.push_back(pack(ka, ea - eb));
            ++a;
            ++b;
        } else {
            return false;
        }
    }
    while (a < f_.size()) r.push_back(f_[a++]);
    out = Monomial(std::move(r));
    return true;
}

Monomial Monomial::restrict_to(std::uint32_t mask, bool keep) const {
    std::vector<std::uint64_t> r;
    for (auto p : f_) {
        const bool in = (mask >> (key_of(p) >> 28)) & 1u;
        if (in == keep) r.push_back(p);
    }
    return Monomial(std::move(r));
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < f_.size(); ++k) {
        if (k) s += "*";
        s += var(k).str();
        if (exp(k) != 1) s += "^" + std::to_string(exp(k));
    }
    return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto p : m.packed()) {
        h ^= std::hash<std::uint64_t>()(p);
        h *= 1099511628211ull;
    }
    return h;
}

bool lex_less(const Monomial& a, const Monomial& b) {
    const auto& fa = a.packed();
    const auto& fb = b.packed();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        const auto ka = key_of(fa[i]), kb = key_of(fb[j]);
        if (ka == kb) {
            if (exp_of(fa[i]) != exp_of(fb[j])) return exp_of(fa[i]) < exp_of(fb[j]);
            ++i;
            ++j;
        } else {
            return ka > kb;
        }
    }
    return i == fa.size() && j < fb.size();
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    const int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return lex_less(a, b);
}

std::uint32_t family_mask(std::initializer_list<Family> fams) {
    std::uint32_t m = 0;
    for (auto f : fams) m |= 1u << static_cast<unsigned>(f);
    return m;
}

// ---------------------------------------------------------------------------

void PolyBuilder::add(const Monomial& m, const mpz_class& c) {
    if (c != 0) buf_.emplace_back(m, c);
}

void PolyBuilder::add(const Polynomial& p, const mpz_class& scale) {
    if (scale == 0) return;
    for (const auto& [m, c] : p.terms()) buf_.emplace_back(m, c * scale);
}

void PolyBuilder::add_product(const Polynomial& a, const Polynomial& b) {
    buf_.reserve(buf_.size() + a.size() * b.size());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) buf_.emplace_back(ma * mb, ca * cb);
}

Polynomial PolyBuilder::finish() {
    std::sort(buf_.begin(), buf_.end(),
              [](const Term& u, const Term& v) { return u.first < v.first; });
    Polynomial p;
    for (auto& term : buf_) {
        if (!p.t_.empty() && p.t_.back().first == term.first) {
            p.t_.back().second += term.second;
        } else {
            if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
            p.t_.push_back(std::move(term));
        }
    }
    if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
    buf_.clear();
    return p;
}

Polynomial::Polynomial(long c) {
    if (c != 0) t_.emplace_back(Monomial(), mpz_class(c));
}

Polynomial::Polynomial(const mpz_class& c) {
    if (c != 0) t_.emplace_back(Monomial(), c);
}

Polynomial Polynomial::from_var(const Var& v) {
    Polynomial p;
    p.t_.emplace_back(Monomial::of(v), mpz_class(1));
    return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, const mpz_class& c) {
    Polynomial p;
    if (c != 0) p.t_.emplace_back(m, c);
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    PolyBuilder b;
    for (auto& [m, c] : terms) b.add(m, c);
    return b.finish();
}

bool Polynomial::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }

mpz_class Polynomial::constant_term() const {
    if (!t_.empty() && t_[0].first.is_one()) return t_[0].second;
    return 0;
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& u, const Monomial& v) { return u.first < v; });
    if (it != t_.end() && it->first == m) return it->second;
    return 0;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& term : p.t_) term.second = -term.second;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.t_.empty()) return *this;
    std::vector<Term> r;
    r.reserve(t_.size() + o.t_.size());
    std::size_t a = 0, b = 0;
    while (a < t_.size() && b < o.t_.size()) {
        if (t_[a].first == o.t_[b].first) {
            mpz_class s = t_[a].second + o.t_[b].second;
            if (s != 0) r.emplace_back(std::move(t_[a].first), std::move(s));
            ++a;
            ++b;
        } else if (t_[a].first < o.t_[b].first) {
            r.push_back(std::move(t_[a++]));
        } else {
            r.push_back(o.t_[b++]);
        }
    }
    while (a < t_.size()) r.push_back(std::move(t_[a++]));
    while (b < o.t_.size()) r.push_back(o.t_[b++]);
    t_ = std::move(r);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    if (b.size() == 1 && b.t_[0].first.is_one()) return a * b.t_[0].second;
    if (a.size() == 1 && a.t_[0].first.is_one()) return b * a.t_[0].second;
    PolyBuilder pb;
    pb.add_product(a, b);
    return pb.finish();
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c) {
    if (c == 0) {
        t_.clear();
    } else {
        for (auto& term : t_) term.second *= c;
    }
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(1), base = *this;
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
    Polynomial p;
    p.t_.reserve(t_.size());
    for (const auto& [mm, c] : t_) p.t_.emplace_back(mm * m, c);
    std::sort(p.t_.begin(), p.t_.end(), [](const Term& u, const Term& v) { return u.first < v.first; });
    return p;
}

bool Polynomial::is_homogeneous() const {
    if (t_.empty()) return true;
    const int w = t_[0].first.weight();
    for (const auto& term : t_)
        if (term.first.weight() != w) return false;
    return true;
}

int Polynomial::max_weight() const {
    int w = 0;
    bool first = true;
    for (const auto& term : t_) {
        const int k = term.first.weight();
        if (first || k > w) w = k;
        first = false;
    }
    return w;
}

int Polynomial::min_weight() const {
    int w = 0;
    bool first = true;
    for (const auto& term : t_) {
        const int k = term.first.weight();
        if (first || k < w) w = k;
        first = false;
    }
    return w;
}

bool Polynomial::involves(std::uint32_t mask) const {
    for (const auto& term : t_)
        for (auto p : term.first.packed())
            if ((mask >> (key_of(p) >> 28)) & 1u) return true;
    return false;
}

std::vector<Var> Polynomial::variables() const {
    std::vector<std::uint32_t> keys;
    for (const auto& term : t_)
        for (auto p : term.first.packed()) keys.push_back(key_of(p));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Var> r;
    for (auto k : keys) r.push_back(Var::from_key(k));
    return r;
}

std::string Polynomial::str() const { return serialize(*this); }

// ---------------------------------------------------------------------------

namespace {

Polynomial single(Family f, int i, int j) {
    if (i < 1) throw InvalidVariable(std::string(family_name(f)) + " index must be positive");
    return Polynomial::from_var(Var{f, i, j});
}

}  // namespace

Polynomial x(int i) { return single(Family::X, i, 0); }
Polynomial y(int i) { return single(Family::Y, i, 0); }
Polynomial z(int i) { return single(Family::Z, i, 0); }
Polynomial q(int i) { return single(Family::Q, i, 0); }
Polynomial qp(int i) { return single(Family::QP, i, 0); }
Polynomial qpp(int i) { return single(Family::QPP, i, 0); }

namespace {
Polynomial cdb(Family f, int i, int j) {
    if (i == 0) return Polynomial(1);
    if (i < 0 || i > j) return Polynomial();
    return Polynomial::from_var(Var{f, i, j});
}
}  // namespace

Polynomial c(int i, int j) { return cdb(Family::C, i, j); }
Polynomial d(int i, int j) { return cdb(Family::D, i, j); }
Polynomial b(int i, int j) { return cdb(Family::B, i, j); }

Polynomial t(int i, int j) {
    if (i == j) throw InvalidVariable("t requires distinct indices");
    if (i > j) std::swap(i, j);
    return Polynomial::from_var(Var{Family::T, i, j});
}

Polynomial g(int i, int j) {
    if (i < 1 || j < 0) throw InvalidVariable("g requires i >= 1 and j >= 0");
    return Polynomial::from_var(Var{Family::G, i, j});
}

Polynomial h(int i, int k) {
    if (i == 0) return Polynomial(1);
    if (i < 0) return Polynomial();
    return Polynomial::from_var(Var{Family::H, i, k});
}

Polynomial symbol(Family f, int i, int j) {
    switch (f) {
        case Family::X: return x(i);
        case Family::Y: return y(i);
        case Family::Z: return z(i);
        case Family::Q: return q(i);
        case Family::QP: return qp(i);
        case Family::QPP: return qpp(i);
        case Family::C: return c(i, j);
        case Family::D: return d(i, j);
        case Family::B: return b(i, j);
        case Family::T: return t(i, j);
        case Family::G: return g(i, j);
        case Family::H: return h(i, j);
    }
    return Polynomial();
}

// ---------------------------------------------------------------------------

Polynomial substitute(const Polynomial& f, const Assignment& a) {
    if (a.empty()) return f;
    std::map<std::pair<std::uint32_t, unsigned>, Polynomial> powers;
    std::map<std::uint32_t, const Polynomial*> by_key;
    for (const auto& [v, p] : a) by_key[v.key()] = &p;
    PolyBuilder out;
    for (const auto& [m, coef] : f.terms()) {
        std::vector<std::uint64_t> kept;
        Polynomial factor(coef);
        for (auto p : m.packed()) {
            auto it = by_key.find(key_of(p));
            if (it == by_key.end()) {
                kept.push_back(p);
                continue;
            }
            auto pk = std::make_pair(key_of(p), exp_of(p));
            auto pw = powers.find(pk);
            if (pw == powers.end()) pw = powers.emplace(pk, it->second->pow(exp_of(p))).first;
            factor = factor * pw->second;
            if (factor.is_zero()) break;
        }
        if (factor.is_zero()) continue;
        Monomial km(std::move(kept));
        for (const auto& [fm, fc] : factor.terms()) out.add(fm * km, fc);
    }
    return out.finish();
}

Polynomial map_variables(const Polynomial& f, const std::function<Var(const Var&)>& fn) {
    PolyBuilder out;
    for (const auto& [m, coef] : f.terms()) {
        Monomial r;
        for (std::size_t k = 0; k < m.size(); ++k) r = r * Monomial::of(fn(m.var(k)), m.exp(k));
        out.add(r, coef);
    }
    return out.finish();
}

CheckResult compare(const Polynomial& lhs, const Polynomial& rhs, const std::string& detail) {
    CheckResult r;
    r.witness = lhs - rhs;
    r.pass = r.witness.is_zero();
    r.detail = detail;
    return r;
}

void accumulate(CheckResult& a, const CheckResult& b) {
    if (!b.pass && a.pass) {
        a.pass = false;
        a.witness = b.witness;
        a.detail = b.detail;
    }
}

namespace {
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(b, a); }
};
}  // namespace

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw NotDivisible("division by zero polynomial");
    const Term* lead = &g.terms()[0];
    for (const auto& term : g.terms())
        if (lex_less(lead->first, term.first)) lead = &term;
    std::map<Monomial, mpz_class, LexGreater> rem;
    for (const auto& [m, c] : f.terms()) rem.emplace(m, c);
    PolyBuilder quotient;
    while (!rem.empty()) {
        auto top = rem.begin();
        Monomial qm;
        if (!top->first.divide(lead->first, qm) || !mpz_divisible_p(top->second.get_mpz_t(), lead->second.get_mpz_t()))
            throw NotDivisible("polynomial is not an exact multiple");
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead->second.get_mpz_t());
        quotient.add(qm, qc);
        for (const auto& [gm, gc] : g.terms()) {
            Monomial pm = gm * qm;
            auto it = rem.find(pm);
            if (it == rem.end()) {
                rem.emplace(pm, -qc * gc);
            } else {
                it->second -= qc * gc;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return quotient.finish();
}

Polynomial coefficient_of(const Polynomial& f, const Monomial& m, std::uint32_t in_families) {
    PolyBuilder out;
    for (const auto& [fm, c] : f.terms())
        if (fm.restrict_to(in_families, true) == m) out.add(fm.restrict_to(in_families, false), c);
    return out.finish();
}

std::map<Monomial, Polynomial> collect(const Polynomial& f, std::uint32_t in_families) {
    std::map<Monomial, PolyBuilder> acc;
    for (const auto& [fm, c] : f.terms())
        acc[fm.restrict_to(in_families, true)].add(fm.restrict_to(in_families, false), c);
    std::map<Monomial, Polynomial> r;
    for (auto& [m, b] : acc) r.emplace(m, b.finish());
    return r;
}

namespace {

void check_square(const std::vector<std::vector<Polynomial>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw NotSquare("matrix is not square");
}

Polynomial cofactor_rec(const std::vector<std::vector<Polynomial>>& m, std::vector<int>& cols, std::size_t row) {
    if (row == m.size()) return Polynomial(1);
    PolyBuilder acc;
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const int col = cols[k];
        if (col < 0) continue;
        const Polynomial& entry = m[row][static_cast<std::size_t>(col)];
        if (!entry.is_zero()) {
            cols[k] = -1;
            Polynomial minor = cofactor_rec(m, cols, row + 1);
            cols[k] = col;
            if (!minor.is_zero()) {
                PolyBuilder prod;
                prod.add_product(entry, minor);
                acc.add(prod.finish(), sign);
            }
        }
        sign = -sign;
    }
    return acc.finish();
}

}  // namespace

Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& m) {
    check_square(m);
    std::vector<int> cols(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) cols[k] = static_cast<int>(k);
    return cofactor_rec(m, cols, 0);
}

Polynomial det_bareiss(const std::vector<std::vector<Polynomial>>& m0) {
    check_square(m0);
    auto m = m0;
    const std::size_t n = m.size();
    if (n == 0) return Polynomial(1);
    int sign = 1;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Polynomial();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(num, prev);
            }
            m[i][k] = Polynomial();
        }
        prev = m[k][k];
    }
    Polynomial r = m[n - 1][n - 1];
    return sign < 0 ? -r : r;
}

Polynomial det(const std::vector<std::vector<Polynomial>>& m) {
    check_square(m);
    return m.size() <= 6 ? det_cofactor(m) : det_bareiss(m);
}

// ---------------------------------------------------------------------------

std::string serialize(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::vector<const Term*> order;
    for (const auto& term : f.terms()) order.push_back(&term);
    std::sort(order.begin(), order.end(),
              [](const Term* a, const Term* b) { return graded_lex_less(b->first, a->first); });
    std::string s;
    bool first = true;
    for (const Term* term : order) {
        mpz_class c = term->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        if (term->first.is_one()) {
            s += c.get_str();
        } else {
            if (c != 1) s += c.get_str() + "*";
            s += term->first.str();
        }
    }
    return s;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Polynomial poly() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty input", pos_);
        PolyBuilder acc;
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        acc.add(term(), sign);
        for (;;) {
            skip();
            if (pos_ >= s_.size()) break;
            const char op = peek();
            if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            acc.add(term(), op == '-' ? -1 : 1);
        }
        return acc.finish();
    }

    Var variable_only() {
        skip();
        Var v = var();
        skip();
        if (pos_ != s_.size()) throw ParseError("trailing characters in variable name", pos_);
        return v;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    mpz_class uint_lit() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected unsigned integer", pos_);
        return mpz_class(s_.substr(start, pos_ - start));
    }

    long int_lit() {
        skip();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        mpz_class v = uint_lit();
        if (!v.fits_slong_p()) throw ParseError("index too large", pos_);
        return neg ? -v.get_si() : v.get_si();
    }

    Var var() {
        skip();
        const std::size_t start = pos_;
        std::string name;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
        static const std::map<std::string, Family> fams = {
            {"x", Family::X}, {"y", Family::Y}, {"z", Family::Z}, {"q", Family::Q},
            {"qp", Family::QP}, {"qpp", Family::QPP}, {"c", Family::C}, {"d", Family::D},
            {"b", Family::B}, {"t", Family::T}, {"g", Family::G}, {"h", Family::H}};
        auto it = fams.find(name);
        if (it == fams.end()) throw ParseError("unknown variable '" + name + "'", start);
        Var v;
        v.family = it->second;
        if (family_is_double_indexed(v.family)) {
            skip();
            if (peek() != '[') throw ParseError("expected '['", pos_);
            ++pos_;
            v.i = static_cast<int>(int_lit());
            skip();
            if (peek() != ',') throw ParseError("expected ','", pos_);
            ++pos_;
            v.j = static_cast<int>(int_lit());
            skip();
            if (peek() != ']') throw ParseError("expected ']'", pos_);
            ++pos_;
        } else {
            if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected index", pos_);
            mpz_class i = uint_lit();
            if (!i.fits_sint_p()) throw ParseError("index too large", pos_);
            v.i = static_cast<int>(i.get_si());
        }
        return v;
    }

    Polynomial factor() {
        const std::size_t at = pos_;
        Var v = var();
        skip();
        unsigned e = 1;
        if (peek() == '^') {
            ++pos_;
            mpz_class ev = uint_lit();
            if (!ev.fits_uint_p()) throw ParseError("exponent too large", pos_);
            e = static_cast<unsigned>(ev.get_ui());
        }
        try {
            return symbol(v.family, v.i, v.j).pow(e);
        } catch (const InvalidVariable& ex) {
            throw ParseError(ex.what(), at);
        }
    }

    Polynomial term() {
        skip();
        Polynomial r(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            r = Polynomial(uint_lit());
            skip();
            if (peek() != '*') return r;
            ++pos_;
        }
        r *= factor();
        for (;;) {
            skip();
            if (peek() != '*') break;
            ++pos_;
            r *= factor();
        }
        return r;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(const std::string& text) { return Parser(text).poly(); }

std::string to_json(const Polynomial& f) {
    std::vector<const Term*> order;
    for (const auto& term : f.terms()) order.push_back(&term);
    std::sort(order.begin(), order.end(),
              [](const Term* a, const Term* b) { return graded_lex_less(b->first, a->first); });
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    for (const Term* term : order) {
        nlohmann::ordered_json e;
        e["coeff"] = term->second.get_str();
        nlohmann::ordered_json mono = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < term->first.size(); ++k) mono[term->first.var(k).str()] = term->first.exp(k);
        e["monomial"] = mono;
        j["terms"].push_back(e);
    }
    return j.dump();
}

Polynomial from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing terms array", 0);
    PolyBuilder acc;
    for (const auto& e : j["terms"]) {
        if (!e.contains("coeff") || !e["coeff"].is_string()) throw ParseError("term without string coeff", 0);
        Polynomial p(mpz_class(e["coeff"].get<std::string>()));
        if (e.contains("monomial")) {
            for (const auto& [name, ex] : e["monomial"].items()) {
                Var v = Parser(name).variable_only();
                p *= symbol(v.family, v.i, v.j).pow(ex.get<unsigned>());
            }
        }
        acc.add(p);
    }
    return acc.finish();
}

}  // namespace schubert
