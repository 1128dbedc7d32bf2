#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fakelines/errors.hpp"
#include "fakelines/pipeline.hpp"

using namespace fakelines;

namespace
{

struct Config
{
    std::string fields;
    std::uint64_t cutoff = kDefaultCutoff;
    std::string format = "human";
    unsigned jobs = 1;
    long ka_index = 1;
    long kpa_index = 1;
    long precision = kDefaultPrecision;
};

std::vector<FieldTableRow> load_rows(const Config &cfg)
{
    return cfg.fields.empty() ? load_bundled() : load_field_file(cfg.fields);
}

ZetaOptions zeta_opts(const Config &cfg)
{
    ZetaOptions o;
    o.cutoff = cfg.cutoff;
    o.jobs = cfg.jobs;
    return o;
}

std::vector<FieldContext> all_fields(const Config &cfg)
{
    auto fields = make_contexts(load_rows(cfg));
    compute_zetas(fields, zeta_opts(cfg), cfg.jobs);
    return fields;
}

FieldContext one_field(const Config &cfg, const std::string &disc, bool with_zeta)
{
    Integer d(disc);
    for (const auto &row : load_rows(cfg))
    {
        if (row.d_k != d)
            continue;
        FieldContext fc = make_context(row);
        if (with_zeta)
            fc.zeta = zeta_minus1(*fc.dec, zeta_opts(cfg));
        return fc;
    }
    throw ValidationError("no field with d_k = " + disc + " in the table");
}

// "2^2,5^1#1"
std::vector<PrimeIdeal> parse_ram(const PrimeDecomposer &dec, const std::string &spec)
{
    std::vector<PrimeIdeal> out;
    if (spec.empty() || spec == "1")
        return out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
    {
        int ordinal = 0;
        if (auto h = tok.find('#'); h != std::string::npos)
        {
            ordinal = std::stoi(tok.substr(h + 1));
            tok = tok.substr(0, h);
        }
        auto caret = tok.find('^');
        if (caret == std::string::npos)
            throw ValidationError("ideal tag '" + tok + "' should look like p^f");
        out.push_back(find_ideal(dec, std::stoull(tok.substr(0, caret)), std::stoi(tok.substr(caret + 1)), ordinal));
    }
    return out;
}

void field_info(const Config &cfg, const std::string &disc)
{
    FieldContext fc = one_field(cfg, disc, false);
    const NumberField &K = fc.K();
    const auto prec = static_cast<mpfr_prec_t>(cfg.precision);
    std::cout << "degree      " << K.degree() << "\n"
              << "polynomial  " << K.poly().to_string() << "\n"
              << "d_k         " << K.disc() << "\n"
              << "index       " << K.index() << "\n"
              << "root disc   " << root_disc(K, prec).to_string(12) << "\n"
              << "ceiling     " << root_disc_ceiling(K.degree()).to_string(12) << "\n";
    if (auto t = K.cyclotomic_tag())
        std::cout << "cyclotomic  Q(zeta_" << *t << ")^+\n";
    std::cout << "bad primes ";
    for (auto p : fc.dec->bad_primes())
        std::cout << " " << p;
    std::cout << "\ntorsion    ";
    for (auto [q, c] : torsion_candidates(K))
        std::cout << " " << q << ":" << to_string(c);
    std::cout << "\n";
}

void field_decompose(const Config &cfg, const std::string &disc, std::uint64_t limit)
{
    FieldContext fc = one_field(cfg, disc, false);
    const Format fmt = parse_format(cfg.format);
    if (fmt == Format::csv)
        std::cout << "p,e_f,source\r\n";
    for (auto p : nt::primes_up_to(limit))
    {
        PrimeSplitting s = fc.dec->decompose(p);
        std::string shape;
        for (auto [e, f] : s.factors)
            shape += (shape.empty() ? "" : " ") + std::string("(") + std::to_string(e) + "," + std::to_string(f) + ")";
        if (fmt == Format::csv)
            std::cout << p << "," << csv_quote(shape) << "," << to_string(s.source) << "\r\n";
        else
            std::cout << p << "  " << shape << "  [" << to_string(s.source) << "]\n";
    }
}

void algebra_euler(const Config &cfg, const std::string &disc, int n, const std::string &ram_spec)
{
    FieldContext fc = one_field(cfg, disc, true);
    QuaternionAlgebra A = algebra_new(*fc.dec, n, parse_ram(*fc.dec, ram_spec));
    VolumeReport vr = volume_report(A, fc.zeta_m1(), fc.zeta->zeta2);
    Interval g = g_invariant(*fc.dec, fc.zeta->zeta2, cfg.ka_index);
    std::cout << "algebra         " << A.describe() << "\n"
              << "zeta_k(-1)      " << fc.zeta_m1() << "\n"
              << "euler number    " << vr.euler << "\n"
              << "vol(norm one)   " << vr.vol_norm1 << "\n"
              << "analytic        " << vr.euler_analytic.to_string(12) << "\n"
              << "required index  " << vr.required_index << "\n"
              << "g(k,A)          " << g.to_string(12) << "\n"
              << "normalized vol  " << vol_normalizer(A, *fc.dec, g).to_string(12) << "\n"
              << "lattice index   " << maximal_lattice_index(A.r(), cfg.ka_index, {}).norm1_to_max << "\n";
    if (n % 2 == 0)
    {
        FakeVerdict v = fake_verdict(A, fc.zeta_m1());
        std::cout << "torsion         " << v.torsion.describe() << "\n"
                  << "verdict         " << to_string(v.status) << " (" << v.reason << ")\n";
    }
}

void bounds_cf(const Config &cfg, bool max_deg, int m)
{
    if (max_deg)
    {
        std::cout << max_degree() << "\n";
        return;
    }
    std::cout << cf_lower_bound(m, cfg.kpa_index).to_string(12) << "\n";
}

void bounds_rootdisc(const Config &cfg)
{
    const Format fmt = parse_format(cfg.format);
    if (fmt == Format::csv)
        std::cout << "m,f_m,delta_min,below\r\n";
    for (int m = 4; m <= 8; ++m)
    {
        Interval f = root_disc_ceiling(m);
        const double dmin = odlyzko_voight_min(m);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", f.mid());
        const bool below = Interval::from_bounds(dmin, dmin).certainly_less(f);
        if (fmt == Format::csv)
            std::cout << m << "," << buf << "," << dmin << "," << (below ? "yes" : "no") << "\r\n";
        else
            std::cout << "m=" << m << "  f(m)=" << buf << "  delta_min=" << dmin
                      << (below ? "  fields possible" : "  no fields") << "\n";
    }
}

void bounds_bs(const Config &cfg, const std::string &disc, double s)
{
    FieldContext fc = one_field(cfg, disc, false);
    Zeta2Result z = zeta2_truncated(*fc.dec, cfg.cutoff, cfg.jobs);
    const double r = regulator_lower_bound(fc.K().degree());
    std::cout << "regulator lower bound  " << r << "\n"
              << "class number bound     "
              << brauer_siegel_hbound(fc.K(), s, z.value, r).to_string(12) << "\n";
}

int run(int argc, char **argv)
{
    CLI::App app{"Arithmetic of fake products of projective lines"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--fields", cfg.fields, "Field table file (default: bundled lists)");
    app.add_option("--cutoff", cfg.cutoff, "Euler product cutoff")->check(CLI::Range(1000ull, 1000000000ull));
    app.add_option("--format", cfg.format, "human, csv, md or jsonl");
    app.add_option("--jobs", cfg.jobs, "Parallel workers")->check(CLI::Range(1u, 256u));
    app.add_option("--ka-index", cfg.ka_index, "[k_A:k]")->check(CLI::PositiveNumber);
    app.add_option("--kpa-index", cfg.kpa_index, "[k'_A:k]")->check(CLI::PositiveNumber);
    app.add_option("--precision", cfg.precision, "Working precision in bits")->check(CLI::Range(53, 65536));

    std::string disc;
    auto *field = app.add_subcommand("field", "Number field invariants");
    field->require_subcommand(1);
    auto *info = field->add_subcommand("info", "Basic invariants");
    info->add_option("--disc", disc, "Field discriminant")->required();
    auto *decomp = field->add_subcommand("decompose", "Splitting of small primes");
    std::uint64_t plimit = 50;
    decomp->add_option("--disc", disc, "Field discriminant")->required();
    decomp->add_option("--up-to", plimit, "Largest prime");

    auto *zeta = app.add_subcommand("zeta", "Exact zeta_k(-1)");
    zeta->add_option("--disc", disc, "Field discriminant")->required();

    auto *algebra = app.add_subcommand("algebra", "Quaternion algebra volumes");
    algebra->require_subcommand(1);
    auto *euler = algebra->add_subcommand("euler", "Euler number and verdict");
    int n = 4;
    std::string ram;
    euler->add_option("--disc", disc, "Field discriminant")->required();
    euler->add_option("--n", n, "Number of split infinite places");
    euler->add_option("--ram", ram, "Ramified primes, e.g. 2^2,5^1");

    auto *bounds = app.add_subcommand("bounds", "Finiteness bounds");
    bounds->require_subcommand(1);
    auto *cf = bounds->add_subcommand("cf", "Lower bound for the degree");
    bool max_deg = false;
    int m = 4;
    cf->add_flag("--max-degree", max_deg, "Largest admissible degree");
    cf->add_option("--m", m, "Degree");
    auto *rootdisc = bounds->add_subcommand("rootdisc", "Root discriminant ceilings");
    auto *bs = bounds->add_subcommand("bs", "Brauer-Siegel class number bound");
    double s = 2.0;
    bs->add_option("--disc", disc, "Field discriminant")->required();
    bs->add_option("--s", s, "Evaluation point");

    auto *enumerate = app.add_subcommand("enumerate", "Candidate (field, ramification) pairs");
    int en = 4;
    enumerate->add_option("--n", en, "Dimension")->check(CLI::IsMember({4, 6}));

    auto *verify = app.add_subcommand("verify", "Regression of the classification");
    auto *tables = app.add_subcommand("tables", "Field tables, candidates and verdicts");
    std::string which = "fields";
    tables->add_option("--which", which, "fields, candidates or verdicts")
        ->check(CLI::IsMember({"fields", "candidates", "verdicts"}));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format fmt = parse_format(cfg.format);
    if (*info)
        field_info(cfg, disc);
    else if (*decomp)
        field_decompose(cfg, disc, plimit);
    else if (*zeta)
        std::cout << one_field(cfg, disc, true).zeta_m1() << "\n";
    else if (*euler)
        algebra_euler(cfg, disc, n, ram);
    else if (*cf)
        bounds_cf(cfg, max_deg, m);
    else if (*rootdisc)
        bounds_rootdisc(cfg);
    else if (*bs)
        bounds_bs(cfg, disc, s);
    else if (*enumerate)
    {
        auto fields = all_fields(cfg);
        emit_candidates(std::cout, en == 6 ? enumerate_n6(fields) : enumerate_candidates(fields, en), fmt);
    }
    else if (*verify)
    {
        VerifyReport rep = run_verification(all_fields(cfg));
        emit_verdicts(std::cout, rep.verdicts, fmt);
        for (const auto &msg : rep.mismatches)
            std::cerr << "mismatch: " << msg << "\n";
        if (!rep.mismatches.empty())
            return 3;
    }
    else if (*tables)
    {
        auto fields = all_fields(cfg);
        if (which == "fields")
            emit_field_table(std::cout, fields, fmt);
        else if (which == "candidates")
            emit_candidates(std::cout, enumerate_candidates(fields, 4), fmt);
        else
            emit_verdicts(std::cout, run_verification(fields).verdicts, fmt);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    try
    {
        return run(argc, argv);
    }
    catch (const RegressionMismatch &e)
    {
        std::cerr << e.what() << "\n";
        return 3;
    }
    catch (const Error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
