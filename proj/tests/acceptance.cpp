#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schubert/harness.hpp"

using namespace schubert;
using namespace schubert::harness;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Outcome of one criterion: pass, or fail split into documented and undocumented parts.
struct Outcome {
    bool pass = true;
    bool documented_only = true;
    std::vector<std::string> lines;

    void fail(const std::string& what, bool documented) {
        pass = false;
        documented_only = documented_only && documented;
        lines.push_back(what);
    }
    void note(const std::string& what) { lines.push_back(what); }
};

void run_case(Outcome& o, const std::string& name, int n) {
    const VerificationReport r = verify(name, n);
    const std::string tag = name + " n=" + std::to_string(n);
    switch (r.status) {
        case Status::Pass: break;
        case Status::ExpectedFail:
            o.fail(tag + " fails (documented deviation) at " + r.detail + ", witness " + serialize(r.witness), true);
            break;
        case Status::Fail: o.fail(tag + " fails at " + r.detail + ", witness " + serialize(r.witness), false); break;
        case Status::UnexpectedPass: o.fail(tag + " passes although a deviation is recorded", false); break;
    }
    for (const auto& note : r.notes)
        if (note.rfind("documented deviation", 0) != 0) o.note(tag + ": " + note);
}

void run_range(Outcome& o, const std::string& name, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) run_case(o, name, n);
}

void time_limit(Outcome& o, double seconds, double limit) {
    if (seconds >= limit) {
        std::ostringstream s;
        s << "took " << seconds << " s, limit " << limit << " s";
        o.fail(s.str(), false);
    }
}

Polynomial random_x_poly(std::mt19937& rng, int n, int max_exp, int terms) {
    std::uniform_int_distribution<int> e(0, max_exp), cf(-5, 5);
    Polynomial f;
    for (int k = 0; k < terms; ++k) {
        Polynomial m = cf(rng);
        for (int i = 1; i <= n; ++i) m *= x(i).pow(static_cast<unsigned>(e(rng)));
        f += m;
    }
    return f;
}

void check(Outcome& o, bool ok, const std::string& what) {
    if (!ok) o.fail(what, false);
}

Outcome property_suites() {
    Outcome o;
    std::mt19937 rng(20260101);
    const Polynomial top = staircase_monomial(4);
    int words = 0;
    for (const auto& w : Permutation::all(4)) {
        const auto all = all_reduced_words(w);
        const Polynomial ref = divided_difference_word(top, all.front());
        const Polynomial f = random_x_poly(rng, 4, 3, 4);
        const Polynomial fref = divided_difference_word(f, all.front());
        for (const auto& word : all) {
            ++words;
            check(o, divided_difference_word(top, word) == ref, "word independence on x^delta w=" + w.str());
            check(o, divided_difference_word(f, word) == fref, "word independence on a random polynomial w=" + w.str());
        }
    }
    o.note("reduced words checked: " + std::to_string(words));
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial f = random_x_poly(rng, 4, 4, 5);
        for (int i = 1; i <= 3; ++i) check(o, divided_difference(divided_difference(f, i), i).is_zero(), "d_i^2 = 0");
        for (int i = 1; i <= 2; ++i)
            check(o, divided_difference_word(f, {i, i + 1, i}) == divided_difference_word(f, {i + 1, i, i + 1}), "braid relation");
        check(o, divided_difference_word(f, {1, 3}) == divided_difference_word(f, {3, 1}), "commutation d1 d3");
    }
    const std::vector<std::pair<IdealKind, Polynomial>> params = {
        {IdealKind::Multiparam, t(1, 2) + t(2, 3)}, {IdealKind::Universal, g(1, 1) + g(2, 1)}, {IdealKind::Classical, Polynomial(1)}};
    for (const auto& [kind, param] : params) {
        NormalFormTable tab(IdealPresentation::make(kind, 3));
        const std::string name = ideal_name(kind);
        for (int trial = 0; trial < 100; ++trial) {
            Polynomial f = random_x_poly(rng, 3, 5, 4);
            if (trial % 2) f *= param;
            const Polynomial nf = tab.normal_form(f);
            check(o, tab.normal_form(nf) == nf, "normal form idempotence " + name);
            bool standard = true;
            for (const auto& [m, a] : nf.terms()) standard = standard && is_standard(m.restrict_to(family_mask({Family::X}), true), 3);
            check(o, standard, "normal form is standard " + name);
            check(o, tab.verify_certificate(f, tab.certificate(f)), "membership certificate " + name);
        }
    }
    o.note("normal forms checked: 100 per ideal, 3 ideals");
    run_case(o, "residue-symmetry", 3);
    return o;
}

struct Criterion {
    std::string title;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"rank-three multiparameter basis and residues match stored values",
         [] {
             Outcome o;
             const auto t0 = Clock::now();
             run_case(o, "multiparam-golden", 3);
             time_limit(o, since(t0), 1);
             return o;
         }},
        {"rank-four multiparameter residues and top polynomial match stored values",
         [] {
             Outcome o;
             const auto t0 = Clock::now();
             run_case(o, "multiparam-golden", 4);
             time_limit(o, since(t0), 60);
             return o;
         }},
        {"universal Cauchy identity, n = 2..4",
         [] {
             Outcome o;
             const auto t0 = Clock::now();
             run_range(o, "cauchy-universal", 2, 3);
             const auto t4 = Clock::now();
             run_case(o, "cauchy-universal", 4);
             time_limit(o, since(t4), 60);
             (void)t0;
             return o;
         }},
        {"S_w(b, b~) = 0 for w != id, n <= 4",
         [] {
             Outcome o;
             const auto t0 = Clock::now();
             run_range(o, "fulton-conjecture-30", 2, 4);
             time_limit(o, since(t0), 60);
             return o;
         }},
        {"quantum Cauchy identities with symbolic parameters",
         [] {
             Outcome o;
             run_range(o, "quantum-cauchy", 2, 4);
             run_range(o, "quantum-cauchy-double", 2, 4);
             run_range(o, "quantum-cauchy-triple", 2, 4);
             run_range(o, "quantum-cauchy-triple-w", 2, 4);
             return o;
         }},
        {"S^{q,q}_w(X, -X) = 0 for w != id, n <= 4",
         [] {
             Outcome o;
             run_range(o, "quantum-vanishing", 2, 4);
             return o;
         }},
        {"universal-ideal pairing and orthogonalization",
         [] {
             Outcome o;
             run_range(o, "box-pairing", 2, 4);
             run_range(o, "gram-schmidt-universal", 2, 3);
             return o;
         }},
        {"Grassmannian determinant cross-checks on S4",
         [] {
             Outcome o;
             run_range(o, "grassmannian-determinant", 2, 4);
             return o;
         }},
        {"Grassmannian e-form on S4",
         [] {
             Outcome o;
             run_range(o, "grassmannian-e-form", 2, 4);
             return o;
         }},
        {"specialization chains on S4",
         [] {
             Outcome o;
             run_range(o, "universal-specialization", 2, 4);
             run_range(o, "second-form-specialization", 2, 4);
             run_range(o, "multiparam-specialization", 2, 4);
             return o;
         }},
        {"classical and quantum infrastructure",
         [] {
             Outcome o;
             run_range(o, "cauchy-classical", 1, 3);
             run_range(o, "schur-methods", 1, 4);
             run_range(o, "quantum-duality", 1, 4);
             run_range(o, "quantum-inversion", 1, 4);
             run_range(o, "quantum-h-capped", 1, 4);
             return o;
         }},
        {"property suites", property_suites},
        {"structure constants on S3",
         [] {
             Outcome o;
             run_range(o, "structure-constants", 2, 3);
             return o;
         }},
        {"suite wall-clock",
         [] {
             Outcome o;
             auto t0 = Clock::now();
             const SuiteResult q = run_suite(Level::Quick);
             const double tq = since(t0);
             t0 = Clock::now();
             const SuiteResult f = run_suite(Level::Full);
             const double tf = since(t0);
             std::ostringstream s;
             s << "quick " << tq << " s (limit 30), full " << tf << " s (limit 600)";
             o.note(s.str());
             o.note("quick: " + format_summary(q).substr(9, format_summary(q).size() - 10));
             o.note("full: " + format_summary(f).substr(9, format_summary(f).size() - 10));
             time_limit(o, tq, 30);
             time_limit(o, tf, 600);
             return o;
         }},
    };

    int passed = 0, documented = 0, failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = Clock::now();
        const Outcome o = criteria[k].run();
        const double s = since(t0);
        const char* verdict = o.pass ? "PASS" : "FAIL";
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", s);
        std::cout << "criterion " << (k + 1) << ": " << verdict << "  " << criteria[k].title << "  [tolerance exact, " << timing
                  << (o.pass || !o.documented_only ? "" : ", documented deviation") << "]\n";
        for (const auto& line : o.lines) std::cout << "    " << line << "\n";
        if (o.pass)
            ++passed;
        else if (o.documented_only)
            ++documented;
        else
            ++failed;
    }
    std::cout << "acceptance: " << passed << " of " << criteria.size() << " criteria pass, " << documented
              << " fail only through documented deviations, " << failed << " fail otherwise\n";
    return failed == 0 ? 0 : 1;
}
