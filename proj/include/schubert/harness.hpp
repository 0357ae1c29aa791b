#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/residue.hpp"

namespace schubert::harness {

struct UnknownIdentity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedRank : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnknownFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GoldenFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CaseOutcome {
    bool pass = true;
    Polynomial witness;
    std::string detail;
    std::vector<std::string> notes;
};

struct IdentityCase {
    std::string name;
    std::string summary;
    int min_n = 2;
    int max_n = 4;
    // Largest rank run by the quick and full suites; max_n may exceed it for opt-in ranks.
    int quick_n = 3;
    int full_n = 4;
    // Rank at which a documented deviation makes the check fail; 0 if none.
    int fails_from = 0;
    std::string deviation;
    std::function<CaseOutcome(int)> run;

    bool expected_pass(int n) const { return fails_from == 0 || n < fails_from; }
};

const std::vector<IdentityCase>& registry();
const IdentityCase& find_case(const std::string& name);

enum class Status { Pass, Fail, ExpectedFail, UnexpectedPass };
const char* status_name(Status s);

struct VerificationReport {
    std::string name;
    int n = 0;
    Status status = Status::Pass;
    Polynomial witness;
    std::string detail;
    std::vector<std::string> notes;
    double seconds = 0;
};

VerificationReport verify(const std::string& name, int n);
// Deterministic text; timings are excluded.
std::string format_report(const VerificationReport& r);

enum class Level { Quick, Full };
Level parse_level(const std::string& s);

struct SuiteResult {
    std::vector<VerificationReport> reports;
    int passed = 0;
    int expected_failures = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

// quick: ranks up to quick_n; full: up to full_n, plus ranks up to max_n (at most 5) when max_n > 4.
SuiteResult run_suite(Level level, int max_n = 0, const std::function<void(const VerificationReport&)>& on_report = {});
std::string format_summary(const SuiteResult& r);

// Golden files: lines "<kind> <key> = <polynomial>" with kind in {normal_form, residue, schubert}.
struct GoldenEntry {
    std::string kind;
    std::string key;
    Polynomial value;
};
struct GoldenFile {
    IdealKind ideal = IdealKind::Multiparam;
    int n = 0;
    std::vector<GoldenEntry> entries;
};
std::string golden_dir();
void set_golden_dir(const std::string& dir);
GoldenFile read_golden(const std::string& path);
std::string golden_path(int n);
CaseOutcome check_golden(const GoldenFile& g);

struct ComputeRequest {
    std::string family;
    int n = 0;
    std::string perm;
    std::string shape;
    int descent = -1;
    std::string comp;
    int i = -1;
    int k = -1;
    std::string method = "jacobi_trudi";
    std::string variant = "definition";
};
const std::vector<std::string>& compute_families();
Polynomial compute(const ComputeRequest& req);

Polynomial residue_of(IdealKind kind, int n, const Polynomial& f);

}  // namespace schubert::harness
