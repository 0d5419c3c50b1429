#pragma once

#include "polybern/identities.hpp"
#include "polybern/umbral.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace polybern {

enum class OutputFormat { json, csv, latex };

/// Parses "json" / "csv" / "latex"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(const std::string& name);

/// Rational as LaTeX: integers plain, fractions as [-]\frac{p}{q}.
std::string to_latex(const Rational& r);

/// Polynomial as a LaTeX expression in x, ascending powers.
std::string to_latex(const Polynomial& p);

/// Ascending coefficient list in canonical "p/q" strings.
std::vector<std::string> coeff_strings(const Polynomial& p);

/// One check record in the streaming JSON schema:
/// {"identity": ..., "params": {...}, "lhs": [...], "rhs": [...], "pass": ...}
std::string report_json_line(const CheckReport& report);

/// Table n -> values[n]; one record/row per n.
void write_numbers(std::ostream& out, const std::vector<Rational>& values, OutputFormat fmt);

/// Coefficient list of one polynomial, ascending powers of x.
void write_poly(std::ostream& out, const Polynomial& p, OutputFormat fmt);

/// Lower-triangular connection matrix, row by row.
void write_connection(std::ostream& out, const ConnectionMatrix& c, OutputFormat fmt);

/// Check reports, one record per line (JSON) or row (CSV/LaTeX).
void write_reports(std::ostream& out, const std::vector<CheckReport>& reports, OutputFormat fmt);

} // namespace polybern
