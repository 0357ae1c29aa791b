#include "schubert/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace schubert {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
            throw InvalidPermutation("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int i, int n) {
    if (i < 1 || i >= n) throw InvalidPermutation("simple transposition index out of range");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    return Permutation(std::move(w));
}

Permutation Permutation::from_code(const Composition& code) {
    const int n = static_cast<int>(code.size());
    if (!is_sub_staircase(code, n)) throw NotSubStaircase("code exceeds the staircase");
    std::vector<int> avail(static_cast<std::size_t>(n));
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    for (int c : code) {
        w.push_back(avail[static_cast<std::size_t>(c)]);
        avail.erase(avail.begin() + c);
    }
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); }))
                throw InvalidPermutation("malformed permutation '" + text + "'");
            w.push_back(std::stoi(item));
        }
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw InvalidPermutation("malformed permutation '" + text + "'");
            w.push_back(ch - '0');
        }
    }
    if (w.empty()) throw InvalidPermutation("empty permutation");
    return Permutation(std::move(w));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<Permutation> r;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        r.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return r;
}

int Permutation::length() const {
    int l = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++l;
    return l;
}

Permutation Permutation::inverse() const {
    std::vector<int> r(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) r[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(r));
}

Composition Permutation::code() const {
    Composition c(w_.size(), 0);
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[j] < w_[i]) ++c[i];
    return c;
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w_.size(); ++i)
        if (w_[i] > w_[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> cur = w_, word;
    for (;;) {
        std::size_t i = 0;
        while (i + 1 < cur.size() && cur[i] < cur[i + 1]) ++i;
        if (i + 1 >= cur.size()) break;
        word.push_back(static_cast<int>(i) + 1);
        std::swap(cur[i], cur[i + 1]);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s;
    const bool wide = w_.size() > 9;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (wide && i) s += ",";
        s += std::to_string(w_[i]);
    }
    return s;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw InvalidPermutation("composition of permutations of different sizes");
    std::vector<int> r(v.w_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = u.w_[static_cast<std::size_t>(v.w_[i] - 1)];
    return Permutation(std::move(r));
}

Permutation from_word(const std::vector<int>& word, int n) {
    Permutation w = Permutation::identity(n);
    for (int a : word) w = w * Permutation::simple(a, n);
    return w;
}

namespace {
void words_rec(const Permutation& w, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
    if (w.is_identity()) {
        out.emplace_back(suffix.rbegin(), suffix.rend());
        return;
    }
    for (int d : w.descents()) {
        suffix.push_back(d);
        words_rec(w * Permutation::simple(d, w.size()), suffix, out);
        suffix.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
    std::vector<std::vector<int>> out;
    std::vector<int> suffix;
    words_rec(w, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_grassmannian(const Permutation& w) { return w.descents().size() <= 1; }

Grassmannian grassmannian(const Permutation& w) {
    const auto d = w.descents();
    if (d.size() > 1) throw NotGrassmannian("permutation " + w.str() + " has more than one descent");
    Grassmannian g;
    g.descent = d.empty() ? 0 : d[0];
    for (int i = 1; i <= g.descent; ++i) g.shape.push_back(w(g.descent - i + 1) - (g.descent - i + 1));
    g.shape = normalize(g.shape);
    return g;
}

Permutation grassmannian_perm(const Partition& shape0, int r, int n) {
    Partition shape = normalize(shape0);
    if (static_cast<int>(shape.size()) > r || r > n) throw ShapeTooBig("shape does not fit the descent");
    if (!shape.empty() && shape[0] > n - r) throw ShapeTooBig("shape does not fit in an r x (n-r) box");
    shape.resize(static_cast<std::size_t>(r), 0);
    std::vector<int> w;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= r; ++i) {
        const int v = shape[static_cast<std::size_t>(r - i)] + i;
        w.push_back(v);
        used[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)]) w.push_back(v);
    return Permutation(std::move(w));
}

Partition normalize(Partition p) {
    std::sort(p.begin(), p.end(), std::greater<int>());
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
    Partition r;
    if (p.empty()) return r;
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int v : p)
            if (v >= j) ++cnt;
        r.push_back(cnt);
    }
    return r;
}

Partition complement(const Partition& p0, int n, int m) {
    Partition p = p0;
    if (static_cast<int>(normalize(p).size()) > n || (!p.empty() && *std::max_element(p.begin(), p.end()) > m))
        throw ShapeTooBig("partition does not fit in the n x m box");
    p.resize(static_cast<std::size_t>(n), 0);
    Partition r(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) r[static_cast<std::size_t>(i - 1)] = m - p[static_cast<std::size_t>(n - i)];
    return r;
}

bool contains(const Partition& lambda, const Partition& mu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const int l = i < lambda.size() ? lambda[i] : 0;
        if (mu[i] > l) return false;
    }
    return true;
}

Frobenius frobenius(const Partition& p0) {
    const Partition p = normalize(p0);
    const Partition pc = conjugate(p);
    Frobenius f;
    for (std::size_t i = 0; i < p.size() && p[i] > static_cast<int>(i); ++i) {
        f.arms.push_back(p[i] - static_cast<int>(i) - 1);
        f.legs.push_back(pc[i] - static_cast<int>(i) - 1);
    }
    return f;
}

Partition from_frobenius(const Frobenius& f) {
    const std::size_t d = f.arms.size();
    if (f.legs.size() != d) throw std::invalid_argument("Frobenius arms and legs differ in length");
    const int rows = d ? f.legs[0] + 1 : 0;
    Partition p(static_cast<std::size_t>(rows), 0);
    for (std::size_t i = 0; i < d; ++i) {
        p[i] = f.arms[i] + static_cast<int>(i) + 1;
        for (int r = static_cast<int>(i) + 1; r <= static_cast<int>(i) + f.legs[i]; ++r)
            p[static_cast<std::size_t>(r)] = std::max(p[static_cast<std::size_t>(r)], static_cast<int>(i) + 1);
    }
    return normalize(p);
}

namespace {
void box_rec(int rows, int maxpart, Partition& cur, std::vector<Partition>& out) {
    out.push_back(normalize(cur));
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = 1; v <= maxpart; ++v) {
        cur.push_back(v);
        box_rec(rows, v, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    Partition cur;
    box_rec(rows, cols, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string partition_str(const Partition& p) { return composition_str(p); }

Partition parse_partition(const std::string& text) {
    Partition p = parse_composition(text);
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1]) throw std::invalid_argument("partition must be weakly decreasing");
    return normalize(p);
}

Composition staircase(int n) {
    Composition d;
    for (int k = 1; k <= n; ++k) d.push_back(n - k);
    return d;
}

bool is_sub_staircase(const Composition& c, int n) {
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] < 0 || c[k] > n - 1 - static_cast<int>(k)) return false;
    return true;
}

std::vector<Composition> sub_staircase(int n) {
    std::vector<Composition> out;
    Composition cur(static_cast<std::size_t>(n), 0);
    for (;;) {
        out.push_back(cur);
        int k = n - 1;
        while (k >= 0 && cur[static_cast<std::size_t>(k)] == n - 1 - k) {
            cur[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        ++cur[static_cast<std::size_t>(k)];
    }
    return out;
}

std::string composition_str(const Composition& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

Composition parse_composition(const std::string& text) {
    Composition c;
    std::string body;
    for (char ch : text)
        if (ch != '(' && ch != ')' && !std::isspace(static_cast<unsigned char>(ch))) body += ch;
    if (body.empty()) return c;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw std::invalid_argument("malformed composition '" + text + "'");
        c.push_back(std::stoi(item));
    }
    return c;
}

}  // namespace schubert
