#include "polybern/format.hpp"

#include "json.hpp"

#include <ostream>
#include <stdexcept>

namespace polybern {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json params_json(const CheckParams& p) {
  ordered_json j;
  j["n"] = p.n;
  j["k"] = p.k;
  if (p.r) j["r"] = *p.r;
  if (p.lambda) j["lambda"] = to_string(*p.lambda);
  return j;
}

ordered_json report_json(const CheckReport& r) {
  ordered_json j;
  j["identity"] = r.identity;
  j["params"] = params_json(r.params);
  j["lhs"] = coeff_strings(r.lhs);
  j["rhs"] = coeff_strings(r.rhs);
  j["pass"] = r.pass;
  if (!r.pass && !r.note.empty()) j["note"] = r.note;
  return j;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += sep;
    s += parts[i];
  }
  return s;
}

std::string params_csv_cells(const CheckParams& p) {
  std::string s = std::to_string(p.n) + "," + std::to_string(p.k) + ",";
  if (p.r) s += std::to_string(*p.r);
  s += ",";
  if (p.lambda) s += to_string(*p.lambda);
  return s;
}

std::string params_display(const CheckParams& p) {
  std::string s = "n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k);
  if (p.r) s += ", r=" + std::to_string(*p.r);
  if (p.lambda) s += ", \\lambda=" + to_string(*p.lambda);
  return s;
}

} // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown output format \"" + name + "\"");
}

std::string to_latex(const Rational& r) {
  const Integer& num = numerator(r);
  const Integer& den = denominator(r);
  if (den == 1) return num.str();
  std::string s;
  if (num < 0) s += '-';
  s += "\\frac{" + Integer(boost::multiprecision::abs(num)).str() + "}{" + den.str() + "}";
  return s;
}

std::string to_latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const Rational& c = p.coeffs()[j];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    const bool unit = (mag == 1 && j > 0);
    if (!unit) s += to_latex(mag);
    if (j == 1) s += "x";
    if (j > 1) s += "x^{" + std::to_string(j) + "}";
  }
  return s;
}

std::vector<std::string> coeff_strings(const Polynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

std::string report_json_line(const CheckReport& report) { return report_json(report).dump(); }

void write_numbers(std::ostream& out, const std::vector<Rational>& values, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      ordered_json arr = ordered_json::array();
      for (std::size_t n = 0; n < values.size(); ++n) {
        ordered_json row;
        row["n"] = n;
        row["value"] = to_string(values[n]);
        arr.push_back(std::move(row));
      }
      out << arr.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "n,value\n";
      for (std::size_t n = 0; n < values.size(); ++n)
        out << n << ',' << to_string(values[n]) << '\n';
      break;
    case OutputFormat::latex:
      for (std::size_t n = 0; n < values.size(); ++n)
        out << n << " & " << to_latex(values[n]) << " \\\\\n";
      break;
  }
}

void write_poly(std::ostream& out, const Polynomial& p, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      out << ordered_json(coeff_strings(p)).dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "power,coefficient\n";
      for (std::size_t j = 0; j < p.coeffs().size(); ++j)
        out << j << ',' << to_string(p.coeffs()[j]) << '\n';
      break;
    case OutputFormat::latex:
      out << to_latex(p) << '\n';
      break;
  }
}

void write_connection(std::ostream& out, const ConnectionMatrix& c, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      ordered_json rows = ordered_json::array();
      for (std::size_t n = 0; n <= c.max_row(); ++n) {
        ordered_json row = ordered_json::array();
        for (std::size_t m = 0; m <= n; ++m) row.push_back(to_string(c.entry(n, m)));
        rows.push_back(std::move(row));
      }
      out << rows.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "n,m,value\n";
      for (std::size_t n = 0; n <= c.max_row(); ++n)
        for (std::size_t m = 0; m <= n; ++m)
          out << n << ',' << m << ',' << to_string(c.entry(n, m)) << '\n';
      break;
    case OutputFormat::latex:
      for (std::size_t n = 0; n <= c.max_row(); ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
          if (m > 0) out << " & ";
          out << to_latex(c.entry(n, m));
        }
        out << " \\\\\n";
      }
      break;
  }
}

void write_reports(std::ostream& out, const std::vector<CheckReport>& reports, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json:
      for (const CheckReport& r : reports) out << report_json_line(r) << '\n';
      break;
    case OutputFormat::csv:
      out << "identity,n,k,r,lambda,pass,lhs,rhs\n";
      for (const CheckReport& r : reports)
        out << r.identity << ',' << params_csv_cells(r.params) << ','
            << (r.pass ? "true" : "false") << ',' << join(coeff_strings(r.lhs), ' ') << ','
            << join(coeff_strings(r.rhs), ' ') << '\n';
      break;
    case OutputFormat::latex:
      for (const CheckReport& r : reports)
        out << r.identity << " & $" << params_display(r.params) << "$ & "
            << (r.pass ? "pass" : "fail") << " & $" << to_latex(r.lhs) << "$ & $"
            << to_latex(r.rhs) << "$ \\\\\n";
      break;
  }
}

} // namespace polybern
