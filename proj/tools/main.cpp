// polybern — exact poly-Bernoulli tables, Appell connection matrices, and
// identity verification over rational arithmetic.
//
// Exit codes: 0 success (and every check passed), 1 at least one check
// failed, 2 invalid invocation.

#include "polybern/format.hpp"
#include "polybern/identities.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace polybern;

struct MutationTarget {
  std::string identity;
  CheckParams params;
};

// "<identity>:<n>,<k>[,<r>[,<lambda>]]", e.g. "thm6:3,2,1,1/2"
MutationTarget parse_mutation(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--mutate: expected identity:n,k[,r[,lambda]]");
  MutationTarget t;
  t.identity = text.substr(0, colon);
  std::vector<std::string> fields;
  const std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (true) {
    const auto comma = rest.find(',', pos);
    fields.push_back(rest.substr(pos, comma == std::string::npos ? comma : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (fields.size() < 2 || fields.size() > 4)
    throw std::invalid_argument("--mutate: expected 2 to 4 parameter fields");
  t.params.n = static_cast<std::size_t>(std::stoull(fields[0]));
  t.params.k = std::stoll(fields[1]);
  if (fields.size() >= 3) t.params.r = static_cast<std::size_t>(std::stoull(fields[2]));
  if (fields.size() == 4) t.params.lambda = parse_rational(fields[3]);
  return t;
}

FamilyTag tag_from_flags(const std::string& family, const CLI::Option* k_opt, long long k,
                         const CLI::Option* r_opt, std::size_t r, const CLI::Option* lambda_opt,
                         const std::string& lambda, const std::string& who) {
  if (family == "poly-bernoulli") {
    if (!*k_opt) throw std::invalid_argument(who + ": poly-bernoulli requires a k flag");
    return FamilyTag::poly_bernoulli(k);
  }
  if (!*r_opt) throw std::invalid_argument(who + ": " + family + " requires an order flag");
  if (family == "higher-bernoulli") return FamilyTag::higher_bernoulli(r);
  if (family == "euler") return FamilyTag::euler(r);
  if (family == "frobenius-euler") {
    if (!*lambda_opt) throw std::invalid_argument(who + ": frobenius-euler requires a lambda flag");
    return FamilyTag::frobenius_euler(r, parse_rational(lambda));
  }
  throw std::invalid_argument(who + ": unknown family \"" + family + "\"");
}

const std::vector<std::string> kFamilyNames = {"poly-bernoulli", "higher-bernoulli", "euler",
                                               "frobenius-euler"};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact poly-Bernoulli numbers and polynomials, Appell connection matrices, "
               "and machine verification of their identities"};
  app.require_subcommand(1);

  // numbers
  auto* numbers = app.add_subcommand("numbers", "Table of poly-Bernoulli numbers B_n^{(k)}");
  long long numbers_k = 0;
  std::size_t numbers_n_max = 0;
  std::string numbers_format = "json", numbers_out;
  numbers->add_option("--k", numbers_k, "Polylogarithm index k")->required();
  numbers->add_option("--n-max", numbers_n_max, "Largest index n")->required();
  numbers->add_option("--format", numbers_format)->check(CLI::IsMember({"json", "csv", "latex"}));
  numbers->add_option("--out", numbers_out, "Write the stream to this file");

  // poly
  auto* poly = app.add_subcommand("poly", "Coefficients of one family polynomial");
  std::string poly_family;
  long long poly_k = 0;
  std::size_t poly_r = 0, poly_n = 0;
  std::string poly_lambda, poly_format = "json", poly_out;
  poly->add_option("--family", poly_family)->required()->check(CLI::IsMember(kFamilyNames));
  auto* poly_k_opt = poly->add_option("--k", poly_k, "poly-Bernoulli index");
  auto* poly_r_opt = poly->add_option("--r", poly_r, "family order");
  auto* poly_lambda_opt = poly->add_option("--lambda", poly_lambda, "Frobenius-Euler parameter");
  poly->add_option("--n", poly_n, "Degree")->required();
  poly->add_option("--format", poly_format)->check(CLI::IsMember({"json", "csv", "latex"}));
  poly->add_option("--out", poly_out);

  // check
  auto* check = app.add_subcommand("check", "Verify identities over a parameter grid");
  GridSpec grid;
  std::vector<std::string> check_lambdas;
  std::string check_format = "json", check_out, check_mutate;
  check->add_option("--n-max", grid.n_max, "Largest n (default 12)");
  check->add_option("--k-min", grid.k_min, "Smallest k (default -4)");
  check->add_option("--k-max", grid.k_max, "Largest k (default 4)");
  check->add_option("--r-max", grid.r_max, "Largest order r (default 4)");
  check->add_option("--lambda", check_lambdas, "Frobenius-Euler parameters (repeatable)");
  check->add_option("--identity", grid.identities, "Restrict to these identities (repeatable)");
  check->add_option("--format", check_format)->check(CLI::IsMember({"json", "csv", "latex"}));
  check->add_option("--out", check_out);
  check->add_option("--mutate", check_mutate,
                    "Fault injection: corrupt one lhs coefficient at identity:n,k[,r[,lambda]]")
      ->group(""); // hidden; exists for exit-code testing

  // connect
  auto* connect = app.add_subcommand("connect", "Connection matrix between two Appell families");
  std::string src_family, dst_family;
  long long src_k = 0, dst_k = 0;
  std::size_t src_r = 0, dst_r = 0, connect_n = 0;
  std::string src_lambda, dst_lambda, connect_format = "json", connect_out;
  connect->add_option("--source", src_family)->required()->check(CLI::IsMember(kFamilyNames));
  auto* src_k_opt = connect->add_option("--source-k", src_k);
  auto* src_r_opt = connect->add_option("--source-r", src_r);
  auto* src_lambda_opt = connect->add_option("--source-lambda", src_lambda);
  connect->add_option("--target", dst_family)->required()->check(CLI::IsMember(kFamilyNames));
  auto* dst_k_opt = connect->add_option("--target-k", dst_k);
  auto* dst_r_opt = connect->add_option("--target-r", dst_r);
  auto* dst_lambda_opt = connect->add_option("--target-lambda", dst_lambda);
  connect->add_option("--n", connect_n, "Largest row")->required();
  connect->add_option("--format", connect_format)->check(CLI::IsMember({"json", "csv", "latex"}));
  connect->add_option("--out", connect_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ofstream file;
    const auto open_stream = [&file](const std::string& path) -> std::ostream& {
      if (path.empty()) return std::cout;
      file.open(path);
      if (!file) throw std::invalid_argument("cannot open output file \"" + path + "\"");
      return file;
    };

    if (numbers->parsed()) {
      std::ostream& out = open_stream(numbers_out);
      std::vector<Rational> values;
      values.reserve(numbers_n_max + 1);
      for (std::size_t n = 0; n <= numbers_n_max; ++n)
        values.push_back(poly_bernoulli_number(n, numbers_k));
      write_numbers(out, values, parse_output_format(numbers_format));
      return 0;
    }

    if (poly->parsed()) {
      std::ostream& out = open_stream(poly_out);
      const FamilyTag tag = tag_from_flags(poly_family, poly_k_opt, poly_k, poly_r_opt, poly_r,
                                           poly_lambda_opt, poly_lambda, "poly");
      Polynomial p;
      if (tag.kind == FamilyKind::PolyBernoulli) {
        p = poly_bernoulli_polynomial(poly_n, tag.k);
      } else {
        // caps are auto-sized to the requested degree plus headroom
        p = appell_polynomial(make_appell_family(tag, poly_n + 2), poly_n);
      }
      write_poly(out, p, parse_output_format(poly_format));
      return 0;
    }

    if (connect->parsed()) {
      std::ostream& out = open_stream(connect_out);
      const FamilyTag src = tag_from_flags(src_family, src_k_opt, src_k, src_r_opt, src_r,
                                           src_lambda_opt, src_lambda, "connect source");
      const FamilyTag dst = tag_from_flags(dst_family, dst_k_opt, dst_k, dst_r_opt, dst_r,
                                           dst_lambda_opt, dst_lambda, "connect target");
      const std::size_t cap = connect_n + 2;
      const ConnectionMatrix c = connection_appell(make_appell_family(src, cap),
                                                   make_appell_family(dst, cap), connect_n);
      write_connection(out, c, parse_output_format(connect_format));
      return 0;
    }

    // check
    if (!check_lambdas.empty()) {
      grid.lambdas.clear();
      for (const std::string& s : check_lambdas) grid.lambdas.push_back(parse_rational(s));
    }
    std::optional<MutationTarget> mutation;
    if (!check_mutate.empty()) mutation = parse_mutation(check_mutate);

    std::vector<CheckReport> reports = run_grid(grid);

    if (mutation) {
      bool hit = false;
      for (CheckReport& r : reports) {
        if (r.identity != mutation->identity || !(r.params == mutation->params)) continue;
        std::vector<Rational> c = r.lhs.coeffs();
        if (c.empty()) c.push_back(1);
        else c[0] += 1;
        r.lhs = Polynomial(std::move(c));
        r.pass = (r.lhs == r.rhs);
        if (!r.pass) r.note = "injected coefficient fault";
        hit = true;
      }
      if (!hit) throw std::invalid_argument("--mutate: no report matches the given grid point");
    }

    std::size_t failed = 0;
    for (const CheckReport& r : reports)
      if (!r.pass) ++failed;

    std::ostream& out = open_stream(check_out);
    write_reports(out, reports, parse_output_format(check_format));
    std::cerr << "checked " << reports.size() << ": " << (reports.size() - failed) << " passed, "
              << failed << " failed\n";
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
