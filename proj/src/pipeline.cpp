#include "fakelines/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fakelines/errors.hpp"

#ifndef FAKELINES_DATA_DIR
#define FAKELINES_DATA_DIR "data"
#endif

namespace fakelines
{

// ------------------------------------------------------------ loading

namespace
{

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::string trim(const std::string &s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Integer parse_integer(const std::string &s, const std::string &where)
{
    std::string t = trim(s);
    if (t.empty())
        throw ParseError(where + ": empty integer");
    size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size() || !std::all_of(t.begin() + static_cast<long>(start), t.end(), ::isdigit))
        throw ParseError(where + ": bad integer '" + t + "'");
    return Integer(t[0] == '+' ? t.substr(1) : t);
}

long parse_small(const std::string &s, const std::string &where)
{
    Integer v = parse_integer(s, where);
    if (!v.fits_slong_p())
        throw ParseError(where + ": integer out of range");
    return v.get_si();
}

// "p:(e,f)|(e,f)"
void parse_override(const std::string &field, PrimeDecomposer::Overrides &out, const std::string &where)
{
    auto colon = field.find(':');
    if (colon == std::string::npos)
        throw ParseError(where + ": override needs p:(e,f)");
    long p = parse_small(field.substr(0, colon), where);
    if (p < 2 || !nt::is_prime(static_cast<std::uint64_t>(p)))
        throw ParseError(where + ": override prime " + std::to_string(p) + " is not prime");
    std::vector<std::pair<int, int>> shape;
    for (const auto &part : split(field.substr(colon + 1), '|'))
    {
        std::string t = trim(part);
        if (t.size() < 5 || t.front() != '(' || t.back() != ')')
            throw ParseError(where + ": bad override entry '" + t + "'");
        auto ef = split(t.substr(1, t.size() - 2), ',');
        if (ef.size() != 2)
            throw ParseError(where + ": override entry needs (e,f)");
        long e = parse_small(ef[0], where), f = parse_small(ef[1], where);
        if (e < 1 || f < 1)
            throw ParseError(where + ": e and f must be positive");
        shape.emplace_back(static_cast<int>(e), static_cast<int>(f));
    }
    if (shape.empty())
        throw ParseError(where + ": empty override");
    if (!out.emplace(static_cast<std::uint64_t>(p), std::move(shape)).second)
        throw ParseError(where + ": duplicate override for " + std::to_string(p));
}

} // namespace

std::vector<FieldTableRow> load_field_table(std::istream &in, const std::string &name)
{
    std::vector<FieldTableRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        const std::string where = name + ":" + std::to_string(lineno);
        auto fields = split(t, ';');
        if (fields.size() < 3)
            throw ParseError(where + ": expected m;d_k;coefficients");
        FieldTableRow row;
        row.source = where;
        long m = parse_small(fields[0], where);
        if (m < 1 || m > 64)
            throw ParseError(where + ": degree out of range");
        row.m = static_cast<int>(m);
        row.d_k = parse_integer(fields[1], where);
        for (const auto &c : split(fields[2], ','))
            row.coeffs.push_back(parse_integer(c, where));
        if (static_cast<long>(row.coeffs.size()) != m + 1)
            throw ParseError(where + ": expected " + std::to_string(m + 1) + " coefficients, got " +
                             std::to_string(row.coeffs.size()));
        if (fields.size() > 3 && !trim(fields[3]).empty())
        {
            long N = parse_small(fields[3], where);
            if (N < 3)
                throw ParseError(where + ": cyclotomic tag must be at least 3");
            row.tag = static_cast<unsigned>(N);
        }
        for (size_t i = 4; i < fields.size(); ++i)
            if (!trim(fields[i]).empty())
                parse_override(fields[i], row.overrides, where);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<FieldTableRow> load_field_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open field table " + path);
    return load_field_table(in, path);
}

std::string bundled_data_dir()
{
    if (const char *env = std::getenv("FAKELINES_DATA_DIR"))
        return env;
    return FAKELINES_DATA_DIR;
}

std::vector<FieldTableRow> load_bundled()
{
    std::vector<FieldTableRow> all;
    for (const char *f : {"quartic.txt", "quintic.txt", "sextic.txt"})
    {
        auto rows = load_field_file(bundled_data_dir() + "/" + f);
        all.insert(all.end(), rows.begin(), rows.end());
    }
    return all;
}

// ------------------------------------------------------------ contexts

const Rational &FieldContext::zeta_m1() const
{
    if (!zeta)
        throw ValidationError("zeta_k(-1) not computed for d_k = " + row.d_k.get_str());
    return zeta->zeta_minus1;
}

FieldContext make_context(const FieldTableRow &row)
{
    try
    {
        IntPolynomial f(row.coeffs);
        if (f.degree() != row.m)
            throw ValidationError("degree mismatch");
        NumberField K = field_new(f, row.d_k, row.tag);
        return FieldContext{row, std::make_shared<PrimeDecomposer>(std::move(K), row.overrides), std::nullopt};
    }
    catch (const Error &e)
    {
        throw ValidationError(row.source + ": " + e.what());
    }
}

std::vector<FieldContext> make_contexts(const std::vector<FieldTableRow> &rows)
{
    std::vector<FieldContext> out;
    out.reserve(rows.size());
    for (const auto &r : rows)
        out.push_back(make_context(r));
    return out;
}

void compute_zetas(std::vector<FieldContext> &fields, const ZetaOptions &opts, unsigned jobs)
{
    if (jobs <= 1 || fields.size() <= 1)
    {
        for (auto &fc : fields)
            fc.zeta = zeta_minus1(*fc.dec, opts);
        return;
    }
    shared_primes(opts.cutoff);
    ZetaOptions inner = opts;
    inner.jobs = 1;
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto worker = [&]() {
        for (size_t i = next++; i < fields.size(); i = next++)
        {
            try
            {
                fields[i].zeta = zeta_minus1(*fields[i].dec, inner);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<size_t>(jobs, fields.size()); ++t)
        pool.emplace_back(worker);
    for (auto &th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

// ------------------------------------------------------------ enumeration

namespace
{

Rational pow2(int e)
{
    Rational v(1);
    if (e >= 0)
        mpz_mul_2exp(v.get_num_mpz_t(), v.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpz_mul_2exp(v.get_den_mpz_t(), v.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return v;
}

// All prime ideals with Np - 1 <= bound, in (p, f, ordinal) order.
std::vector<PrimeIdeal> small_ideals(const FieldContext &fc, const Integer &bound)
{
    std::vector<PrimeIdeal> out;
    if (bound < 1)
        return out;
    if (!bound.fits_ulong_p() || bound > 100000000)
        throw ValidationError("ideal search bound " + bound.get_str() + " too large");
    const std::uint64_t limit = bound.get_ui() + 1;
    for (auto p : nt::primes_up_to(limit))
    {
        PrimeSplitting s;
        try
        {
            s = fc.dec->decompose(p);
        }
        catch (const MissingSplitting &e)
        {
            throw MissingSplitting(std::string(e.what()) + " (d_k = " + fc.row.d_k.get_str() +
                                   " needs every p <= " + std::to_string(limit) + ")");
        }
        for (const auto &P : s.ideals())
            if (P.norm() - 1 <= bound)
                out.push_back(P);
    }
    return out;
}

void subsets(const std::vector<PrimeIdeal> &ideals, size_t start, std::vector<PrimeIdeal> &cur, const Integer &prod,
             const std::function<bool(const Integer &)> &prune,
             const std::function<void(const std::vector<PrimeIdeal> &, const Integer &)> &emit)
{
    emit(cur, prod);
    for (size_t i = start; i < ideals.size(); ++i)
    {
        Integer next = prod * (ideals[i].norm() - 1);
        if (prune(next))
            continue;
        cur.push_back(ideals[i]);
        subsets(ideals, i + 1, cur, next, prune, emit);
        cur.pop_back();
    }
}

CandidateRow make_row(const FieldContext &fc, const QuaternionAlgebra &A)
{
    CandidateRow row;
    row.m = fc.row.m;
    row.d_k = fc.row.d_k;
    row.zeta_m1 = fc.zeta_m1();
    row.ram = A.ram;
    row.euler = covolume_norm1(A, row.zeta_m1);
    row.required_index = pow2(A.n) / row.euler;
    row.analytic = euler_crosscheck(A, fc.zeta->zeta2);
    return row;
}

} // namespace

Rational volume_budget(const FieldContext &fc, int n)
{
    const Rational z = abs(fc.zeta_m1());
    if (z == 0)
        throw ValidationError("zeta_k(-1) = 0");
    return pow2(n) / (pow2(n + 1 - fc.row.m) * z);
}

bool integrality_filter(const FieldContext &fc, int n)
{
    Rational q = volume_budget(fc, n);
    return q.get_den() == 1 && q > 0;
}

bool excluded_by_root_disc(const NumberField &K)
{
    return root_disc_ceiling(K.degree()).certainly_less(root_disc(K));
}

std::vector<CandidateRow> enumerate_candidates(const std::vector<FieldContext> &fields, int n)
{
    std::vector<CandidateRow> rows;
    for (const auto &fc : fields)
    {
        const int m = fc.row.m;
        if (m < 4 || m > 6 || m < n)
            continue;
        if (excluded_by_root_disc(fc.K()) || !integrality_filter(fc, n))
            continue;
        const Integer Q = volume_budget(fc, n).get_num();
        auto ideals = small_ideals(fc, Q);
        ideals.erase(std::remove_if(ideals.begin(), ideals.end(),
                                    [&](const PrimeIdeal &P) { return Q % (P.norm() - 1) != 0; }),
                     ideals.end());
        std::vector<PrimeIdeal> cur;
        subsets(
            ideals, 0, cur, Integer(1), [&](const Integer &prod) { return Q % prod != 0; },
            [&](const std::vector<PrimeIdeal> &ram, const Integer &) {
                const int r = static_cast<int>(ram.size());
                if ((m - n + r) % 2 != 0 || (m - n) + r < 1)
                    return;
                QuaternionAlgebra A = algebra_new(*fc.dec, n, ram);
                CandidateRow row = make_row(fc, A);
                if (row.required_index.get_den() != 1 || row.required_index <= 0)
                    return;
                if (n % 2 == 0)
                    row.verdict = to_string(fake_verdict(A, row.zeta_m1).status);
                rows.push_back(std::move(row));
            });
    }
    std::sort(rows.begin(), rows.end(), [](const CandidateRow &a, const CandidateRow &b) {
        return std::tie(a.m, a.d_k, a.ram) < std::tie(b.m, b.d_k, b.ram);
    });
    return rows;
}

std::vector<CandidateRow> enumerate_n6(const std::vector<FieldContext> &fields)
{
    const int n = 6;
    std::vector<CandidateRow> rows;
    for (const auto &fc : fields)
    {
        if (fc.row.m != 6)
            continue;
        // 2 |zeta| prod <= 64
        const Rational cap = Rational(32) / abs(fc.zeta_m1());
        const Integer floor_cap = cap.get_num() / cap.get_den();
        auto ideals = small_ideals(fc, floor_cap);
        std::vector<PrimeIdeal> cur;
        subsets(
            ideals, 0, cur, Integer(1), [&](const Integer &prod) { return prod > cap; },
            [&](const std::vector<PrimeIdeal> &ram, const Integer &) {
                const int r = static_cast<int>(ram.size());
                if (r < 2 || r % 2 != 0)
                    return;
                rows.push_back(make_row(fc, algebra_new(*fc.dec, n, ram)));
            });
    }
    std::sort(rows.begin(), rows.end(), [](const CandidateRow &a, const CandidateRow &b) {
        return std::tie(a.d_k, a.ram) < std::tie(b.d_k, b.ram);
    });
    return rows;
}

QuaternionAlgebra candidate_algebra(const FieldContext &fc, const CandidateRow &row, int n)
{
    return algebra_new(*fc.dec, n, row.ram);
}

// ------------------------------------------------------------ verification

const std::vector<ExpectedCandidate> &reference_candidates()
{
    using S = VerdictStatus;
    static const std::vector<ExpectedCandidate> ref = {
        {1957, {{3, 1}, {7, 1}}, S::eliminated},   {2000, {{2, 2}, {5, 1}}, S::fake_confirmed},
        {2304, {{2, 1}, {3, 2}}, S::fake_confirmed}, {38569, {{7, 1}}, S::eliminated},
        {106069, {{2, 1}}, S::eliminated},         {453789, {}, S::eliminated},
        {1387029, {}, S::eliminated},              {1397493, {}, S::eliminated},
    };
    return ref;
}

namespace
{

const FieldContext *find_field(const std::vector<FieldContext> &fields, long d_k)
{
    for (const auto &fc : fields)
        if (fc.row.d_k == d_k)
            return &fc;
    return nullptr;
}

std::string row_key(long d_k, const std::vector<PrimeIdeal> &ram)
{
    return std::to_string(d_k) + "[" + ideal_list(ram, ",") + "]";
}

} // namespace

VerifyReport run_verification(const std::vector<FieldContext> &fields)
{
    const int n = 4;
    VerifyReport rep;
    std::vector<std::string> expected_keys;
    for (const auto &ref : reference_candidates())
    {
        const FieldContext *fc = find_field(fields, ref.d_k);
        if (!fc)
        {
            rep.mismatches.push_back(std::to_string(ref.d_k) + ": field missing from input");
            continue;
        }
        std::vector<PrimeIdeal> ram;
        for (auto [p, f] : ref.ram)
            ram.push_back(find_ideal(*fc->dec, p, f));
        QuaternionAlgebra A = algebra_new(*fc->dec, n, ram);
        expected_keys.push_back(row_key(ref.d_k, A.ram));
        FakeVerdict v = fake_verdict(A, fc->zeta_m1());
        if (v.status != ref.status)
            rep.mismatches.push_back(v.algebra + ": got " + to_string(v.status) + ", expected " +
                                     to_string(ref.status));
        rep.verdicts.push_back(std::move(v));
    }

    rep.enumerated = enumerate_candidates(fields, n);
    std::vector<std::string> got_keys;
    for (const auto &row : rep.enumerated)
        got_keys.push_back(row_key(row.d_k.get_si(), row.ram));
    std::sort(expected_keys.begin(), expected_keys.end());
    std::sort(got_keys.begin(), got_keys.end());
    std::vector<std::string> extra, missing;
    std::set_difference(got_keys.begin(), got_keys.end(), expected_keys.begin(), expected_keys.end(),
                        std::back_inserter(extra));
    std::set_difference(expected_keys.begin(), expected_keys.end(), got_keys.begin(), got_keys.end(),
                        std::back_inserter(missing));
    for (const auto &k : extra)
        rep.mismatches.push_back("enumeration has extra row " + k);
    for (const auto &k : missing)
        rep.mismatches.push_back("enumeration lacks row " + k);
    return rep;
}

VerifyReport verify_examples(const std::vector<FieldContext> &fields)
{
    VerifyReport rep = run_verification(fields);
    if (!rep.mismatches.empty())
    {
        std::string msg;
        for (const auto &s : rep.mismatches)
            msg += (msg.empty() ? "" : "; ") + s;
        throw RegressionMismatch(msg);
    }
    return rep;
}

// ------------------------------------------------------------ emission

Format parse_format(const std::string &s)
{
    if (s == "human")
        return Format::human;
    if (s == "csv")
        return Format::csv;
    if (s == "md" || s == "markdown")
        return Format::md;
    if (s == "jsonl" || s == "json-lines")
        return Format::jsonl;
    throw ValidationError("unknown format '" + s + "'");
}

std::string csv_quote(const std::string &s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string ideal_list(const std::vector<PrimeIdeal> &ram, const std::string &sep)
{
    std::string out;
    for (size_t i = 0; i < ram.size(); ++i)
        out += (i ? sep : "") + ram[i].tag();
    return out;
}

namespace
{

using Table = std::vector<std::vector<std::string>>;

void render(std::ostream &out, const std::vector<std::string> &head, const Table &rows, Format fmt)
{
    switch (fmt)
    {
    case Format::csv:
    {
        auto line = [&](const std::vector<std::string> &cells) {
            for (size_t i = 0; i < cells.size(); ++i)
                out << (i ? "," : "") << csv_quote(cells[i]);
            out << "\r\n";
        };
        line(head);
        for (const auto &r : rows)
            line(r);
        break;
    }
    case Format::md:
    {
        auto line = [&](const std::vector<std::string> &cells) {
            out << "|";
            for (const auto &c : cells)
            {
                std::string esc;
                for (char ch : c)
                    esc += ch == '|' ? std::string("\\|") : std::string(1, ch);
                out << " " << esc << " |";
            }
            out << "\n";
        };
        line(head);
        out << "|";
        for (size_t i = 0; i < head.size(); ++i)
            out << "---|";
        out << "\n";
        for (const auto &r : rows)
            line(r);
        break;
    }
    default:
    {
        std::vector<size_t> w(head.size());
        for (size_t i = 0; i < head.size(); ++i)
            w[i] = head[i].size();
        for (const auto &r : rows)
            for (size_t i = 0; i < r.size(); ++i)
                w[i] = std::max(w[i], r[i].size());
        auto line = [&](const std::vector<std::string> &cells) {
            std::string s;
            for (size_t i = 0; i < cells.size(); ++i)
            {
                s += cells[i];
                if (i + 1 < cells.size())
                    s += std::string(w[i] - cells[i].size() + 2, ' ');
            }
            out << s << "\n";
        };
        line(head);
        for (const auto &r : rows)
            line(r);
    }
    }
}

std::string num_den(const Rational &q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string fixed(double x, int digits)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

std::string splitting_summary(const FieldContext &fc)
{
    std::string out;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
    {
        std::string cell;
        try
        {
            auto degs = fc.dec->decompose(p).inertia_degrees();
            for (size_t i = 0; i < degs.size(); ++i)
                cell += (i ? "," : "") + std::to_string(degs[i]);
        }
        catch (const MissingSplitting &)
        {
            cell = "?";
        }
        out += (out.empty() ? "" : " ") + std::to_string(p) + ":[" + cell + "]";
    }
    return out;
}

template <class T> std::vector<const T *> sorted_ptrs(const std::vector<T> &v, std::function<bool(const T &, const T &)> lt)
{
    std::vector<const T *> out;
    for (const auto &x : v)
        out.push_back(&x);
    std::stable_sort(out.begin(), out.end(), [&](const T *a, const T *b) { return lt(*a, *b); });
    return out;
}

} // namespace

void emit_field_table(std::ostream &out, const std::vector<FieldContext> &fields, Format fmt)
{
    auto order = sorted_ptrs<FieldContext>(fields, [](const FieldContext &a, const FieldContext &b) {
        return std::tie(a.row.m, a.row.d_k) < std::tie(b.row.m, b.row.d_k);
    });
    if (fmt == Format::jsonl)
    {
        for (const FieldContext *fc : order)
        {
            nlohmann::ordered_json j;
            j["degree"] = fc->row.m;
            j["d_k"] = fc->row.d_k.get_str();
            j["polynomial"] = fc->K().poly().to_string();
            j["zeta_m1"] = num_den(fc->zeta_m1());
            j["root_disc"] = fixed(root_disc(fc->K()).mid(), 4);
            j["splitting"] = splitting_summary(*fc);
            out << j.dump() << "\n";
        }
        return;
    }
    Table rows;
    for (const FieldContext *fc : order)
        rows.push_back({std::to_string(fc->row.m), fc->row.d_k.get_str(), fc->K().poly().to_string(),
                        fc->zeta_m1().get_str(), fixed(root_disc(fc->K()).mid(), 4), splitting_summary(*fc)});
    render(out, {"degree", "d_k", "polynomial", "zeta_m1", "root_disc", "splitting"}, rows, fmt);
}

void emit_candidates(std::ostream &out, std::vector<CandidateRow> rows, Format fmt)
{
    std::stable_sort(rows.begin(), rows.end(), [](const CandidateRow &a, const CandidateRow &b) {
        return std::tie(a.m, a.d_k, a.ram) < std::tie(b.m, b.d_k, b.ram);
    });
    if (fmt == Format::jsonl)
    {
        for (const auto &r : rows)
        {
            nlohmann::ordered_json j;
            j["degree"] = r.m;
            j["d_k"] = r.d_k.get_str();
            j["zeta_m1"] = num_den(r.zeta_m1);
            auto tags = nlohmann::ordered_json::array();
            for (const auto &P : r.ram)
                tags.push_back(P.tag());
            j["d_A"] = tags;
            j["euler"] = r.euler.get_str();
            j["index"] = r.required_index.get_str();
            j["verdict"] = r.verdict;
            out << j.dump() << "\n";
        }
        return;
    }
    Table t;
    for (const auto &r : rows)
        t.push_back({std::to_string(r.m), r.d_k.get_str(), r.zeta_m1.get_str(),
                     r.ram.empty() ? "1" : ideal_list(r.ram, " "), r.euler.get_str(), r.required_index.get_str(),
                     r.verdict});
    render(out, {"degree", "d_k", "zeta_m1", "d_A", "euler", "index", "verdict"}, t, fmt);
}

void emit_verdicts(std::ostream &out, const std::vector<FakeVerdict> &verdicts, Format fmt)
{
    if (fmt == Format::jsonl)
    {
        for (const auto &v : verdicts)
        {
            nlohmann::ordered_json j;
            j["algebra"] = v.algebra;
            j["euler"] = v.euler.get_str();
            j["index"] = v.required_index.get_str();
            j["verdict"] = to_string(v.status);
            j["reason"] = v.reason;
            j["torsion"] = v.torsion.describe();
            out << j.dump() << "\n";
        }
        return;
    }
    Table t;
    for (const auto &v : verdicts)
        t.push_back({v.algebra, v.euler.get_str(), v.required_index.get_str(), to_string(v.status), v.reason});
    render(out, {"algebra", "euler", "index", "verdict", "reason"}, t, fmt);
}

} // namespace fakelines
