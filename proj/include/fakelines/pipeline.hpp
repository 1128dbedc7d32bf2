#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fakelines/torsion.hpp"
#include "fakelines/zetacalc.hpp"

namespace fakelines
{

struct FieldTableRow
{
    int m = 0;
    Integer d_k;
    std::vector<Integer> coeffs; // constant term first, leading 1 included
    std::optional<unsigned> tag;
    PrimeDecomposer::Overrides overrides;
    std::string source; // file:line
};

/// Parses `m;d_k;c_0,...,1;[N];[p:(e,f)|(e,f);...]` records. Throws ParseError.
std::vector<FieldTableRow> load_field_table(std::istream &in, const std::string &name = "<input>");
std::vector<FieldTableRow> load_field_file(const std::string &path);

/// Directory with the shipped quartic, quintic and sextic lists.
std::string bundled_data_dir();
/// All three bundled lists in degree order.
std::vector<FieldTableRow> load_bundled();

struct FieldContext
{
    FieldTableRow row;
    std::shared_ptr<PrimeDecomposer> dec;
    std::optional<ZetaValues> zeta;

    const NumberField &K() const { return dec->field(); }
    const Rational &zeta_m1() const;
};

/// Field and decomposer construction; row errors surface as ValidationError.
FieldContext make_context(const FieldTableRow &row);
std::vector<FieldContext> make_contexts(const std::vector<FieldTableRow> &rows);

/// Fills in zeta values, spreading fields over `jobs` workers.
void compute_zetas(std::vector<FieldContext> &fields, const ZetaOptions &opts, unsigned jobs = 1);

/// 2^n / (2^(n+1-m) |zeta_k(-1)|), the budget for prod(Np - 1).
Rational volume_budget(const FieldContext &fc, int n);

/// The budget is a positive integer.
bool integrality_filter(const FieldContext &fc, int n);

/// root_disc(K) certainly exceeds the ceiling for its degree.
bool excluded_by_root_disc(const NumberField &K);

struct CandidateRow
{
    int m = 0;
    Integer d_k;
    Rational zeta_m1;
    std::vector<PrimeIdeal> ram;
    Rational euler;
    Rational required_index;
    std::string verdict; // empty when not judged
    Interval analytic;   // analytic route for the Euler number
};

std::vector<CandidateRow> enumerate_candidates(const std::vector<FieldContext> &fields, int n = 4);

/// n = m = 6 search: 2 zeta_k(-1) prod(Np - 1) <= 64 with r >= 2 even.
std::vector<CandidateRow> enumerate_n6(const std::vector<FieldContext> &fields);

/// Algebra for a candidate row.
QuaternionAlgebra candidate_algebra(const FieldContext &fc, const CandidateRow &row, int n);

struct ExpectedCandidate
{
    long d_k;
    std::vector<std::pair<std::uint64_t, int>> ram; // (p, f)
    VerdictStatus status;
};

/// The reference candidate list for n = 4.
const std::vector<ExpectedCandidate> &reference_candidates();

struct VerifyReport
{
    std::vector<FakeVerdict> verdicts; // one per reference candidate
    std::vector<CandidateRow> enumerated;
    std::vector<std::string> mismatches;
};

/// Judges the reference rows and compares them with a fresh enumeration.
VerifyReport run_verification(const std::vector<FieldContext> &fields);
/// As above; throws RegressionMismatch when anything differs.
VerifyReport verify_examples(const std::vector<FieldContext> &fields);

enum class Format
{
    human,
    csv,
    md,
    jsonl
};

Format parse_format(const std::string &s);

std::string csv_quote(const std::string &s);
std::string ideal_list(const std::vector<PrimeIdeal> &ram, const std::string &sep);

void emit_field_table(std::ostream &out, const std::vector<FieldContext> &fields, Format fmt);
void emit_candidates(std::ostream &out, std::vector<CandidateRow> rows, Format fmt);
void emit_verdicts(std::ostream &out, const std::vector<FakeVerdict> &verdicts, Format fmt);

} // namespace fakelines
