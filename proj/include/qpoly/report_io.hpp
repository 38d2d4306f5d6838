#pragma once

#include <cstdint>
#include <ios>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpoly/verify.hpp"

namespace qpoly {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Text };

enum class TableKind { Poly, Matel, Genfun, Position, Hahn };

inline const char* table_kind_name(TableKind k)
{
    switch (k) {
    case TableKind::Poly: return "poly";
    case TableKind::Matel: return "matel";
    case TableKind::Genfun: return "genfun";
    case TableKind::Position: return "position";
    case TableKind::Hahn: return "hahn";
    }
    return "?";
}

/// Extra knobs for tables; verification ignores them.
struct TableOptions {
    std::int64_t order = 12;
    std::int64_t nmax = 6;
    Rational x = Rational(1, 3);
    LadderFamily family = LadderFamily::QGaussian;
    HalfInt mu = HalfInt::zero();
    HalfInt nu = HalfInt::zero();
    Rational alpha = 1;
    Rational beta = 1;
};

struct Table {
    TableKind kind = TableKind::Poly;
    std::vector<Json> rows;
};

namespace detail {

inline Json rational_array(const std::vector<Rational>& v)
{
    Json a = Json::array();
    for (const auto& c : v) {
        a.push_back(to_string(c));
    }
    return a;
}

inline std::string real_exact_str(const Real& r) { return r.str(30, std::ios_base::scientific); }

} // namespace detail

inline Json context_json(const QContext& ctx)
{
    Json c;
    c["s"] = ctx.has_s() ? Json(to_string(ctx.s())) : Json(nullptr);
    c["q"] = to_string(ctx.q());
    c["omega"] = to_string(ctx.omega());
    c["omega0"] = to_string(ctx.omega0());
    return c;
}

// ---------------------------------------------------------------------------
// Tables

inline Table build_poly_table(const QContext& ctx, const TableOptions& opt)
{
    Table t{TableKind::Poly, {}};
    for (std::int64_t n = 0; n <= opt.nmax; ++n) {
        t.rows.push_back(Json{{"family", "q-gaussian"}, {"n", n}, {"variable", "x"},
                              {"coeffs", detail::rational_array(qgaussian(ctx, n).coeffs())}});
    }
    for (std::int64_t n = 0; n <= opt.nmax; ++n) {
        t.rows.push_back(Json{{"family", "q-factorial"}, {"n", n}, {"variable", "u=q^x"},
                              {"coeffs", detail::rational_array(qfactorial_u(ctx, n).coeffs())}});
    }
    for (std::int64_t n = 0; n <= opt.nmax; ++n) {
        t.rows.push_back(Json{{"family", "hahn"}, {"n", n}, {"variable", "x"},
                              {"coeffs", detail::rational_array(hahn_factorial(ctx, n).coeffs())}});
    }
    return t;
}

inline Table build_matel_table(const QContext& ctx, const TableOptions& opt)
{
    Table t{TableKind::Matel, {}};
    for (std::int64_t n = 0; n <= opt.nmax; ++n) {
        for (std::int64_t r = 0; r <= opt.nmax; ++r) {
            const MatElParams p{opt.mu, opt.nu, opt.alpha, opt.beta, n, r};
            const Rational closed = matel_closed(ctx, opt.family, p);
            const Rational oracle = matel_oracle(ctx, opt.family, p);
            t.rows.push_back(Json{{"family", family_name(opt.family)},
                                  {"mu", opt.mu.str()},
                                  {"nu", opt.nu.str()},
                                  {"alpha", to_string(opt.alpha)},
                                  {"beta", to_string(opt.beta)},
                                  {"n", n},
                                  {"r", r},
                                  {"closed", to_string(closed)},
                                  {"oracle", to_string(oracle)},
                                  {"match", closed == oracle}});
        }
    }
    return t;
}

inline Table build_genfun_table(const QContext& ctx, const TableOptions& opt)
{
    Table t{TableKind::Genfun, {}};
    const TruncSeries g = gaussian_genfun_lhs(ctx, opt.x, opt.order);
    for (std::int64_t n = 0; n <= opt.order; ++n) {
        const Rational expect = qgaussian(ctx, n)(opt.x) / q_factorial(ctx, n);
        t.rows.push_back(Json{{"x", to_string(opt.x)},
                              {"n", n},
                              {"coefficient", to_string(g[static_cast<std::size_t>(n)])},
                              {"phi_n(x)/[n]!", to_string(expect)}});
    }
    return t;
}

inline Table build_position_table(const QContext& ctx, const TableOptions& opt)
{
    Table t{TableKind::Position, {}};
    const auto c = position_coefficients(ctx, opt.nmax);
    for (std::int64_t n = 0; n <= opt.nmax; ++n) {
        t.rows.push_back(Json{{"n", n}, {"coeffs", detail::rational_array(c[static_cast<std::size_t>(n)].coeffs())}});
    }
    return t;
}

/// Hahn derivative and integral of phi_dot_n at x, exact and numeric, plus the
/// normalized Hahn exponential.
inline Table build_hahn_table(const QContext& ctx, const TableOptions& opt)
{
    Table t{TableKind::Hahn, {}};
    const Rational tol(1, 1000000000000LL);
    for (std::int64_t n = 0; n <= opt.nmax; ++n) {
        const Poly p = hahn_factorial(ctx, n);
        const auto num = hahn_integral_numeric(ctx, sampled_from_poly(p, "phi_dot_n"), opt.x, tol);
        t.rows.push_back(Json{{"n", n},
                              {"x", to_string(opt.x)},
                              {"derivative", to_string(hahn_derivative_poly(ctx, p)(opt.x))},
                              {"integral", to_string(hahn_integral_closed(ctx, p, opt.x))},
                              {"integral_numeric", detail::real_exact_str(num.value)},
                              {"error_bound", detail::real_exact_str(num.error_bound)},
                              {"terms", num.terms},
                              {"tol", to_string(tol)}});
    }
    const std::int64_t K = 40;
    const Real xr = to_real(opt.x);
    if ((ctx.q() - 1) * opt.x + ctx.omega() != 0) {
        t.rows.push_back(Json{{"function", "e_{q,omega}(x)/e_{q,omega}(omega0)"},
                              {"x", to_string(opt.x)},
                              {"factors", K},
                              {"value", detail::real_exact_str(hahn_exp_normalized(ctx, xr, K))},
                              {"tol", detail::real_exact_str(hahn_exp_residual_bound(ctx, xr, K))}});
    }
    return t;
}

inline Table build_table(const QContext& ctx, TableKind kind, const TableOptions& opt)
{
    switch (kind) {
    case TableKind::Poly: return build_poly_table(ctx, opt);
    case TableKind::Matel: return build_matel_table(ctx, opt);
    case TableKind::Genfun: return build_genfun_table(ctx, opt);
    case TableKind::Position: return build_position_table(ctx, opt);
    case TableKind::Hahn: return build_hahn_table(ctx, opt);
    }
    throw DomainError("unknown table kind");
}

// ---------------------------------------------------------------------------
// Serialization

inline Json report_json(const QContext& ctx, const VerificationReport& report)
{
    Json records = Json::array();
    for (const auto& r : report.records) {
        Json j{{"id", r.id},   {"parameters", r.parameters}, {"status", status_name(r.status)},
               {"lhs", r.lhs}, {"rhs", r.rhs},               {"citation", r.citation}};
        if (!r.note.empty()) {
            j["note"] = r.note;
        }
        records.push_back(std::move(j));
    }
    Json out;
    out["context"] = context_json(ctx);
    out["kind"] = "verify";
    out["seed"] = report.seed;
    out["suites"] = report.suites;
    out["summary"] = Json{{"total", report.records.size()},
                          {"pass", report.count(CheckStatus::Pass)},
                          {"fail", report.count(CheckStatus::Fail)},
                          {"documented-discrepancy", report.count(CheckStatus::DocumentedDiscrepancy)}};
    out["rows"] = std::move(records);
    return out;
}

inline Json table_json(const QContext& ctx, const Table& table)
{
    Json out;
    out["context"] = context_json(ctx);
    out["kind"] = table_kind_name(table.kind);
    out["rows"] = table.rows;
    return out;
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

inline std::string cell_text(const Json& v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string out;
        for (std::size_t k = 0; k < v.size(); ++k) {
            out += (k == 0 ? "" : " ") + cell_text(v[k]);
        }
        return out;
    }
    if (v.is_null()) {
        return "";
    }
    return v.dump();
}

/// Rows may differ in shape (the hahn table ends with an exponential row), so
/// the header is the union of keys in first-seen order.
inline std::vector<std::string> csv_columns(const Json& rows)
{
    std::vector<std::string> cols;
    for (const auto& row : rows) {
        for (const auto& item : row.items()) {
            if (std::find(cols.begin(), cols.end(), item.key()) == cols.end()) {
                cols.push_back(item.key());
            }
        }
    }
    return cols;
}

} // namespace detail

/// Rows only; the context goes into a leading comment line.
inline void write_csv(std::ostream& os, const Json& doc)
{
    const Json& ctx = doc["context"];
    os << "# kind=" << doc["kind"].get<std::string>() << " s=" << detail::cell_text(ctx["s"])
       << " q=" << ctx["q"].get<std::string>() << " omega=" << ctx["omega"].get<std::string>()
       << " omega0=" << ctx["omega0"].get<std::string>();
    if (doc.contains("seed")) {
        os << " seed=" << doc["seed"].dump();
    }
    os << '\n';
    const Json& rows = doc["rows"];
    const auto cols = detail::csv_columns(rows);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        os << (k == 0 ? "" : ",") << detail::csv_field(cols[k]);
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < cols.size(); ++k) {
            os << (k == 0 ? "" : ",");
            if (row.contains(cols[k])) {
                os << detail::csv_field(detail::cell_text(row[cols[k]]));
            }
        }
        os << '\n';
    }
}

inline void write_text(std::ostream& os, const Json& doc)
{
    const Json& ctx = doc["context"];
    os << doc["kind"].get<std::string>() << "  s=" << detail::cell_text(ctx["s"]) << " q=" << ctx["q"].get<std::string>()
       << " omega=" << ctx["omega"].get<std::string>() << " omega0=" << ctx["omega0"].get<std::string>() << '\n';
    if (doc.contains("seed")) {
        os << "seed " << doc["seed"].dump() << '\n';
    }
    if (doc["kind"] == "verify") {
        for (const auto& row : doc["rows"]) {
            const std::string status = row["status"].get<std::string>();
            os << status << "  " << row["id"].get<std::string>() << "  (" << row["parameters"].get<std::string>()
               << ")\n";
            if (status != "pass") {
                os << "    lhs: " << row["lhs"].get<std::string>() << '\n'
                   << "    rhs: " << row["rhs"].get<std::string>() << '\n'
                   << "    " << row["citation"].get<std::string>() << '\n';
                if (row.contains("note")) {
                    os << "    note: " << row["note"].get<std::string>() << '\n';
                }
            }
        }
        const Json& s = doc["summary"];
        os << "total " << s["total"].dump() << ", pass " << s["pass"].dump() << ", fail " << s["fail"].dump()
           << ", documented-discrepancy " << s["documented-discrepancy"].dump() << '\n';
        return;
    }
    for (const auto& row : doc["rows"]) {
        bool first = true;
        for (const auto& item : row.items()) {
            os << (first ? "" : "  ") << item.key() << '=' << detail::cell_text(item.value());
            first = false;
        }
        os << '\n';
    }
}

inline void write_document(std::ostream& os, const Json& doc, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::Json: os << doc.dump(2) << '\n'; return;
    case OutputFormat::Csv: write_csv(os, doc); return;
    case OutputFormat::Text: write_text(os, doc); return;
    }
}

/// 0 when nothing failed, 1 otherwise.
inline int exit_code_for(const VerificationReport& report) { return report.ok() ? 0 : 1; }

} // namespace qpoly
