#include "eisen/cli.hpp"

#include "eisen/error.hpp"
#include "eisen/geometry.hpp"
#include "eisen/solvers.hpp"
#include "eisen/svg.hpp"
#include "eisen/triples.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace eisen::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, json, csv };

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

struct Style {
  bool color = false;
  std::string pass(const std::string& s) const { return color ? "\033[32m" + s + "\033[0m" : s; }
  std::string fail(const std::string& s) const { return color ? "\033[31m" + s + "\033[0m" : s; }
};

BigInt parse_bigint(const std::string& s) {
  const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                [](unsigned char c) { return std::isdigit(c); });
  if (!digits || s == "-") throw Error(Errc::InvalidArgument, "not an integer: " + s);
  return BigInt(s);
}

std::string str(const BigInt& v) { return to_string(v); }

// ---------------------------------------------------------------- solve

struct SolveOptions {
  std::string p = "7";
  std::uint32_t n = 0;
  std::string method = "power";
  Format format = Format::text;
};

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  const BigInt p = parse_bigint(o.p);
  SolutionPair s;
  if (o.method == "power") {
    s = eisenstein_solution(p, o.n);
  } else if (o.method == "recurrence") {
    if (p != 7) throw Error(Errc::InvalidArgument, "the recurrence method is defined for p = 7");
    s = recurrence_solution(o.n);
  } else {
    s = ascend(p, o.n);
  }
  const PositivePair pos = normalize_positive(s);
  const BigInt value = s.form_value();
  const BigInt g = gcd(s.a, s.b);
  const bool p_divides_a = mod(s.a, p) == 0;

  switch (o.format) {
    case Format::json: {
      json j;
      j["p"] = str(p);
      j["n"] = o.n;
      j["a"] = str(s.a);
      j["b"] = str(s.b);
      j["A"] = str(pos.A);
      j["B"] = str(pos.B);
      j["form_value"] = str(value);
      j["gcd"] = str(g);
      j["method"] = method_name(s.method);
      j["p_divides_a"] = p_divides_a;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "p,n,method,a,b,A,B,form_value,gcd,p_divides_a\n"
          << p << ',' << o.n << ',' << method_name(s.method) << ',' << s.a << ',' << s.b << ','
          << pos.A << ',' << pos.B << ',' << value << ',' << g << ','
          << (p_divides_a ? "true" : "false") << '\n';
      break;
    case Format::text:
      out << "p = " << p << ", n = " << o.n << ", method = " << method_name(s.method) << '\n'
          << "a = " << s.a << '\n'
          << "b = " << s.b << '\n'
          << "A = " << pos.A << '\n'
          << "B = " << pos.B << '\n'
          << "form_value = " << value << '\n'
          << "gcd = " << g << '\n'
          << "p_divides_a = " << (p_divides_a ? "true" : "false") << '\n';
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- table

int cmd_table(std::uint32_t n_max, Format format, std::ostream& out) {
  struct Row {
    std::uint32_t n;
    BigInt a, b, A, B;
  };
  std::vector<Row> rows;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    const SolutionPair s = eisenstein_solution(7, n);
    const PositivePair pos = normalize_positive(s);
    rows.push_back({n, s.a, s.b, pos.A, pos.B});
  }

  switch (format) {
    case Format::json: {
      json j = json::array();
      for (const auto& r : rows) {
        j.push_back({{"n", r.n}, {"a", str(r.a)}, {"b", str(r.b)}, {"A", str(r.A)}, {"B", str(r.B)}});
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,a,b,A,B\n";
      for (const auto& r : rows) {
        out << r.n << ',' << r.a << ',' << r.b << ',' << r.A << ',' << r.B << '\n';
      }
      break;
    case Format::text: {
      std::size_t w = 4;
      for (const auto& r : rows) {
        for (const BigInt* v : {&r.a, &r.b, &r.A, &r.B}) w = std::max(w, str(*v).size() + 1);
      }
      const auto col = [&](const std::string& s) { out << std::setw(static_cast<int>(w)) << s; };
      out << std::setw(4) << "n";
      for (const char* h : {"a", "b", "A", "B"}) col(h);
      out << '\n';
      for (const auto& r : rows) {
        out << std::setw(4) << r.n;
        for (const BigInt* v : {&r.a, &r.b, &r.A, &r.B}) col(str(*v));
        out << '\n';
      }
      break;
    }
  }
  return kOk;
}

// ------------------------------------------------------------ corollary

int cmd_corollary(std::uint32_t n, Format format, std::ostream& out) {
  const auto pairs = corollary_solutions(n);
  const BigInt target = ipow(BigInt(7), 2 * n);
  switch (format) {
    case Format::json: {
      json j;
      j["n"] = n;
      j["target"] = str(target);
      auto& arr = j["pairs"] = json::array();
      for (const auto& p : pairs) {
        arr.push_back({{"a", str(p.A)}, {"b", str(p.B)}, {"coprime", p.coprime()}});
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "a,b,coprime\n";
      for (const auto& p : pairs) out << p.A << ',' << p.B << ',' << (p.coprime() ? "true" : "false") << '\n';
      break;
    case Format::text:
      out << n << " positive solutions of a^2 + ab + b^2 = 7^" << 2 * n << " = " << target << '\n';
      for (const auto& p : pairs) {
        out << "  (" << p.A << ", " << p.B << ")" << (p.coprime() ? "  coprime" : "") << '\n';
      }
      break;
  }
  return kOk;
}

// -------------------------------------------------------------- triples

int cmd_triples(const BigInt& z_max, bool verify, Format format, std::ostream& out) {
  const auto triples = enumerate_triples(z_max);
  std::optional<CoverageReport> report;
  if (verify) report = verify_parametrization(z_max);

  switch (format) {
    case Format::json: {
      json j;
      auto& arr = j["triples"] = json::array();
      for (const auto& t : triples) arr.push_back(to_json(t));
      if (report) j["coverage"] = to_json(*report);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "x,y,z,origin,a,b\n";
      for (const auto& t : triples) {
        out << t.x << ',' << t.y << ',' << t.z << ',' << origin_name(t.origin) << ','
            << t.params->first << ',' << t.params->second << '\n';
      }
      if (report) {
        out << "\nmissing_x,missing_y,missing_z,primitive\n";
        for (const auto& t : report->missing) {
          out << t.x << ',' << t.y << ',' << t.z << ',' << (t.primitive() ? "true" : "false") << '\n';
        }
      }
      break;
    case Format::text:
      for (const auto& t : triples) {
        out << '(' << t.x << ", " << t.y << ", " << t.z << ")  " << origin_name(t.origin) << '('
            << t.params->first << ", " << t.params->second << ")\n";
      }
      if (report) {
        out << "coverage for z <= " << report->z_max << ": generated " << report->generated_count
            << ", brute force " << report->brute_count << ", missing " << report->missing.size()
            << " (" << report->missing_primitive() << " primitive, "
            << report->missing_imprimitive() << " imprimitive), unsound "
            << report->unsound.size() << '\n';
        for (const auto& t : report->missing) {
          out << "  missing (" << t.x << ", " << t.y << ", " << t.z << ")"
              << (t.primitive() ? " primitive" : "") << '\n';
        }
      }
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- embed

struct EmbedOptions {
  std::string figure;
  std::string svg_path;
  bool check = false;
  std::optional<double> scale;
  Format format = Format::text;
};

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

std::vector<Check> run_checks(const Embedding& e) {
  std::vector<Check> checks;
  checks.push_back({"on_circle", e.all_on_circle(), "x^2 + y^2 = " + e.radius_sq.str()});

  const auto mismatches = e.expected_mismatches();
  checks.push_back({"expected_distances", mismatches.empty(),
                    std::to_string(e.expected.size() - mismatches.size()) + "/" +
                        std::to_string(e.expected.size()) + " match"});

  bool integral = true;
  try {
    (void)e.distance_table();
  } catch (const Error&) {
    integral = false;
  }
  const std::size_t n = e.points.size();
  checks.push_back({"integrality", integral, std::to_string(n * (n - 1) / 2) + " pairs"});

  const PtolemyReport pt = ptolemy_all(e);
  checks.push_back({"ptolemy", pt.failures.empty(),
                    std::to_string(pt.checked - pt.failures.size()) + "/" +
                        std::to_string(pt.checked) + " cyclic quadrilaterals"});
  return checks;
}

int cmd_embed(const EmbedOptions& o, const Style& style, std::ostream& out, std::ostream& err) {
  Embedding e;
  try {
    e = o.figure == "k222" ? build_k222() : build_k333();
  } catch (const Error& ex) {
    err << ex.what() << '\n';
    return kConstructionFailed;
  }

  std::vector<std::string> labels;
  for (const auto& [name, p] : e.points) labels.push_back(name);
  std::map<LabelPair, BigInt> table;
  std::optional<std::string> table_error;
  try {
    table = e.distance_table();
  } catch (const Error& ex) {
    table_error = ex.what();
  }
  auto cell = [&](const std::string& a, const std::string& b) -> std::string {
    if (a == b) return "0";
    auto it = table.find(make_label_pair(a, b));
    return it == table.end() ? "?" : str(it->second);
  };

  const std::vector<Check> checks = o.check ? run_checks(e) : std::vector<Check>{};
  const bool all_ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });

  switch (o.format) {
    case Format::json: {
      json j;
      j["figure"] = o.figure;
      j["radius_sq"] = e.radius_sq.str();
      j["labels"] = labels;
      json rows = json::array();
      for (const auto& a : labels) {
        json row = json::array();
        for (const auto& b : labels) row.push_back(cell(a, b));
        rows.push_back(row);
      }
      j["distances"] = rows;
      j["circular_order"] = circular_labels(e);
      if (o.check) {
        json cs = json::array();
        for (const auto& c : checks) cs.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        j["checks"] = cs;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      for (const auto& l : labels) out << ',' << l;
      out << '\n';
      for (const auto& a : labels) {
        out << a;
        for (const auto& b : labels) out << ',' << cell(a, b);
        out << '\n';
      }
      break;
    case Format::text: {
      out << o.figure << ": " << labels.size() << " points on x^2 + y^2 = " << e.radius_sq << '\n';
      out << std::setw(4) << "";
      for (const auto& l : labels) out << std::setw(4) << l;
      out << '\n';
      for (const auto& a : labels) {
        out << std::setw(4) << a;
        for (const auto& b : labels) out << std::setw(4) << cell(a, b);
        out << '\n';
      }
      if (o.check) {
        out << "circular order:";
        for (const auto& l : circular_labels(e)) out << ' ' << l;
        out << '\n';
        for (const auto& c : checks) {
          out << (c.ok ? style.pass("PASS") : style.fail("FAIL")) << "  " << c.name << "  "
              << c.detail << '\n';
        }
        if (!table_error) {
          out << "odd-distance neighbours:\n";
          for (const auto& [v, nbrs] : odd_distance_graph(e)) {
            out << "  " << v << " (" << nbrs.size() << "):";
            for (const auto& w : nbrs) out << ' ' << w;
            out << '\n';
          }
        }
      }
      break;
    }
  }
  if (table_error) err << *table_error << '\n';

  if (!o.svg_path.empty()) {
    const double scale = o.scale.value_or(200.0 / std::sqrt(e.radius_sq.convert_to<double>()));
    std::ofstream f(o.svg_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << o.svg_path << '\n';
      return kUsage;
    }
    f << emit_svg(e, scale);
  }
  return all_ok && !table_error ? kOk : kConstructionFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solutions of a^2 + ab + b^2 = p^n and integer-distance circle embeddings",
               "eisen"};
  app.require_subcommand(1);

  Format format = Format::text;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Coprime positive solution of a^2 + ab + b^2 = p^n");
  solve_cmd->add_option("--p", solve.p, "Base p")->capture_default_str();
  solve_cmd->add_option("--n", solve.n, "Exponent n")->required();
  solve_cmd->add_option("--method", solve.method, "Construction")
      ->check(CLI::IsMember({"power", "recurrence", "descent"}))
      ->capture_default_str();
  add_format(solve_cmd);

  std::uint32_t n_max = 6;
  auto* table_cmd = app.add_subcommand("table", "Coefficients of (2 + w)^n and their positive pairs");
  table_cmd->add_option("--n-max", n_max, "Largest n")->capture_default_str();
  add_format(table_cmd);

  std::uint32_t corollary_n = 1;
  auto* corollary_cmd = app.add_subcommand("corollary", "n distinct positive solutions for 7^(2n)");
  corollary_cmd->add_option("--n", corollary_n, "n")->required()->check(CLI::PositiveNumber);
  add_format(corollary_cmd);

  std::string z_max = "1";
  bool verify = false;
  auto* triples_cmd = app.add_subcommand("triples", "Solutions of x^2 + xy + y^2 = z^2 from M and N");
  triples_cmd->add_option("--z-max", z_max, "Largest z")->required();
  triples_cmd->add_flag("--verify", verify, "Compare against exhaustive search");
  add_format(triples_cmd);

  EmbedOptions embed;
  auto* embed_cmd = app.add_subcommand("embed", "Integer-distance circle embeddings");
  embed_cmd->add_option("--figure", embed.figure, "Figure")
      ->required()
      ->check(CLI::IsMember({"k222", "k333"}));
  embed_cmd->add_option("--svg", embed.svg_path, "Write an SVG drawing to this path");
  embed_cmd->add_flag("--check", embed.check, "Verify circle, distances and Ptolemy relations");
  embed_cmd->add_option("--scale", embed.scale, "SVG pixels per unit length")
      ->check(CLI::PositiveNumber);
  add_format(embed_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Style style;
  style.color = &out == &std::cout && ::isatty(STDOUT_FILENO) && std::getenv("EISEN_NO_COLOR") == nullptr;

  try {
    if (*solve_cmd) {
      solve.format = format;
      return cmd_solve(solve, out);
    }
    if (*table_cmd) return cmd_table(n_max, format, out);
    if (*corollary_cmd) return cmd_corollary(corollary_n, format, out);
    if (*triples_cmd) {
      const BigInt z = parse_bigint(z_max);
      if (z < 1) throw Error(Errc::InvalidArgument, "--z-max must be positive");
      return cmd_triples(z, verify, format, out);
    }
    embed.format = format;
    return cmd_embed(embed, style, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case Errc::NoRepresentation: return kNoRepresentation;
      case Errc::ConstructionFailed: return kConstructionFailed;
      default: return kUsage;
    }
  }
}

}  // namespace eisen::cli
