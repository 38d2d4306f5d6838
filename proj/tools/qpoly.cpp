// qpoly: run the verification suites or print exact tables.
//
//   qpoly verify --s 1/2 --omega 1/8 --format text
//   qpoly table --kind poly --q 1/2 --nmax 2
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpoly/report_io.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kIoError = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string s;
    std::string q;
    std::string omega = "0";
    std::int64_t order = 12;
    std::int64_t nmax = 6;
    std::vector<std::string> suites;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = qpoly::VerifyOptions{}.seed;

    std::string kind;
    std::string x = "1/3";
    std::string family = "q-gaussian";
    std::string mu = "0";
    std::string nu = "0";
    std::string alpha = "1";
    std::string beta = "1";
};

qpoly::Rational parse_or_usage(const std::string& flag, const std::string& text)
{
    try {
        return qpoly::parse_rational(text);
    } catch (const qpoly::DomainError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

qpoly::QContext make_context(const Options& o, bool need_s)
{
    if (!o.s.empty() && !o.q.empty()) {
        throw UsageError("give either --s or --q, not both");
    }
    if (o.s.empty() && (need_s || o.q.empty())) {
        throw UsageError(need_s ? "--s is required" : "one of --s or --q is required");
    }
    try {
        const qpoly::QContext base = o.s.empty() ? qpoly::QContext::from_q(parse_or_usage("--q", o.q))
                                                 : qpoly::QContext::from_s(parse_or_usage("--s", o.s));
        return base.with_omega(parse_or_usage("--omega", o.omega));
    } catch (const qpoly::DomainError& e) {
        throw UsageError(e.what());
    }
}

qpoly::OutputFormat parse_format(const std::string& f)
{
    if (f == "json") {
        return qpoly::OutputFormat::Json;
    }
    if (f == "csv") {
        return qpoly::OutputFormat::Csv;
    }
    if (f == "text") {
        return qpoly::OutputFormat::Text;
    }
    throw UsageError("--format must be json, csv or text");
}

qpoly::HalfInt parse_half(const std::string& flag, const std::string& text)
{
    const qpoly::Rational r = parse_or_usage(flag, text);
    if (r == 0) {
        return qpoly::HalfInt::zero();
    }
    if (r == qpoly::Rational(1, 2)) {
        return qpoly::HalfInt::half();
    }
    throw UsageError(flag + " must be 0 or 1/2");
}

qpoly::LadderFamily parse_family(const std::string& f)
{
    for (const auto fam : {qpoly::LadderFamily::QGaussian, qpoly::LadderFamily::QFactorial, qpoly::LadderFamily::Hahn}) {
        if (f == qpoly::family_name(fam)) {
            return fam;
        }
    }
    throw UsageError("--family must be q-gaussian, q-factorial or hahn");
}

qpoly::TableKind parse_kind(const std::string& k)
{
    for (const auto kind : {qpoly::TableKind::Poly, qpoly::TableKind::Matel, qpoly::TableKind::Genfun,
                            qpoly::TableKind::Position, qpoly::TableKind::Hahn}) {
        if (k == qpoly::table_kind_name(kind)) {
            return kind;
        }
    }
    throw UsageError("--kind must be poly, matel, genfun, position or hahn");
}

/// Writes to --out or stdout. Returns false when the file cannot be written.
bool emit(const Options& o, const qpoly::Json& doc, qpoly::OutputFormat fmt)
{
    std::ostringstream buf;
    qpoly::write_document(buf, doc, fmt);
    if (o.out.empty() || o.out == "-") {
        std::cout << buf.str();
        return static_cast<bool>(std::cout);
    }
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        return false;
    }
    file << buf.str();
    file.close();
    return !file.fail();
}

int run_verify(const Options& o)
{
    const qpoly::QContext ctx = make_context(o, true);
    const auto fmt = parse_format(o.format);
    for (const auto& name : o.suites) {
        if (!qpoly::is_known_suite(name)) {
            throw UsageError("unknown suite '" + name + "'");
        }
    }
    qpoly::VerifyOptions vo;
    vo.order = o.order;
    vo.nmax = o.nmax;
    vo.seed = o.seed;
    vo.suites = o.suites;
    const auto report = qpoly::run_verification(ctx, vo);
    if (!emit(o, qpoly::report_json(ctx, report), fmt)) {
        std::cerr << "qpoly: cannot write " << o.out << '\n';
        return kIoError;
    }
    return qpoly::exit_code_for(report);
}

int run_table(const Options& o)
{
    const qpoly::QContext ctx = make_context(o, false);
    const auto fmt = parse_format(o.format);
    qpoly::TableOptions to;
    to.order = o.order;
    to.nmax = o.nmax;
    to.x = parse_or_usage("--x", o.x);
    to.family = parse_family(o.family);
    to.mu = parse_half("--mu", o.mu);
    to.nu = parse_half("--nu", o.nu);
    to.alpha = parse_or_usage("--alpha", o.alpha);
    to.beta = parse_or_usage("--beta", o.beta);
    qpoly::Table table;
    try {
        table = qpoly::build_table(ctx, parse_kind(o.kind), to);
    } catch (const qpoly::DomainError& e) {
        throw UsageError(e.what());
    }
    if (!emit(o, qpoly::table_json(ctx, table), fmt)) {
        std::cerr << "qpoly: cannot write " << o.out << '\n';
        return kIoError;
    }
    return 0;
}

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--s", o.s, "base root s as p/q, q = s^2");
    cmd->add_option("--q", o.q, "q as p/q, when s is not rational");
    cmd->add_option("--omega", o.omega, "Hahn shift omega")->capture_default_str();
    cmd->add_option("--order", o.order, "series truncation order N")->capture_default_str()->check(CLI::NonNegativeNumber);
    cmd->add_option("--nmax", o.nmax, "largest degree")->capture_default_str()->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", o.format, "json, csv or text")->capture_default_str();
    cmd->add_option("--out", o.out, "output file (default stdout)");
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Exact q-polynomial identities: verification and tables"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, o);
    verify->add_option("--suite", o.suites, "suite name, repeatable (default: all)");
    verify->add_option("--seed", o.seed, "seed for random polynomial cases")->capture_default_str();

    auto* table = app.add_subcommand("table", "print an exact table");
    add_common(table, o);
    table->add_option("--kind", o.kind, "poly, matel, genfun, position or hahn")->required();
    table->add_option("--x", o.x, "evaluation point for genfun and hahn")->capture_default_str();
    table->add_option("--family", o.family, "matel family")->capture_default_str();
    table->add_option("--mu", o.mu, "matel mu, 0 or 1/2")->capture_default_str();
    table->add_option("--nu", o.nu, "matel nu, 0 or 1/2")->capture_default_str();
    table->add_option("--alpha", o.alpha, "matel alpha")->capture_default_str();
    table->add_option("--beta", o.beta, "matel beta")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (verify->parsed()) {
            return run_verify(o);
        }
        return run_table(o);
    } catch (const UsageError& e) {
        std::cerr << "qpoly: " << e.what() << '\n';
        return kUsageError;
    }
}
