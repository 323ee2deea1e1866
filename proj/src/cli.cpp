#include "hdx/cli.hpp"

#include "hdx/depth.hpp"
#include "hdx/oracle.hpp"
#include "hdx/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hdx::cli {

namespace {

struct Input {
  std::optional<MonomialIdeal> ideal;
  HilbertSeries series;
};

Input read_input(const std::string& text) {
  if (looks_like_series(text)) {
    HilbertSeries s = parse_series(text);
    HilbertFunctionView check(s.numerator, s.n);  // validates nonnegativity
    return {std::nullopt, std::move(s)};
  }
  MonomialIdeal ideal = parse_ideal(text);
  HilbertSeries s = hilbert_series(ideal);
  return {std::move(ideal), std::move(s)};
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_ints(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out + "]";
}

std::string render_decomposition(const HilbertDecomposition& c) {
  if (c.terms.empty()) return "0";
  std::string out;
  for (const auto& [dim, q] : c.grouped()) {
    std::string num = q.to_string();
    const bool single = std::count(num.begin(), num.end(), ' ') == 0;
    if (!out.empty()) out += " + ";
    out += single ? num : "(" + num + ")";
    if (dim > 0) out += "/(1-t)^" + std::to_string(dim);
  }
  return out;
}

DepthReport compute_depth(const Request& req, const Input& in, std::ostream& err) {
  DepthOptions opts;
  opts.parallel = req.parallel;
  opts.strict_m = req.strict_m;
  opts.lexify.max_degree = req.max_degree;

  Method method = req.method;
  if (method == Method::automatic)
    method = in.ideal && in.ideal->is_squarefree() ? Method::squarefree : Method::series;

  if (method == Method::squarefree) {
    if (!in.ideal) throw InvalidInput("--method squarefree needs an ideal, not a series");
    if (req.strict_m) err << "note: --strict-m only affects the series path\n";
    if (in.ideal->is_squarefree()) return hdepth_squarefree(*in.ideal, opts);
    return hdepth_algorithm1(*in.ideal, opts);
  }
  return hdepth_series(HilbertFunctionView(in.series), opts);
}

void print_depth_text(std::ostream& out, const DepthReport& r, const HilbertSeries& s, bool with_cert) {
  out << "hdepth = " << r.hdepth << '\n';
  out << "method = " << to_string(r.method) << '\n';
  out << "n = " << s.n << '\n';
  out << "numerator = " << s.numerator.to_string() << '\n';
  if (r.sigma_hdepth) out << "sigma: m = " << r.m << ", hdepth = " << *r.sigma_hdepth << '\n';
  if (r.method == DepthMethod::series_path) out << "m = " << r.m << ", q = " << r.q << '\n';
  for (const auto& t : r.trace)
    out << "rejected q = " << t.q << ": b_" << t.first_negative_index << " = " << t.value.get_str() << '\n';
  if (with_cert) out << "certificate: H(t) = " << render_decomposition(r.certificate) << '\n';
}

void print_depth_json(std::ostream& out, const DepthReport& r, const HilbertSeries& s,
                      std::optional<long> oracle) {
  out << "{\"hdepth\": " << r.hdepth << ", \"n\": " << s.n
      << ", \"method\": " << json_string(to_string(r.method))
      << ", \"numerator\": " << json_ints(s.numerator.coeffs()) << ", \"certificate\": [";
  for (std::size_t i = 0; i < r.certificate.terms.size(); ++i) {
    const auto& t = r.certificate.terms[i];
    out << (i ? ", " : "") << "{\"shift\": " << t.shift << ", \"dim\": " << t.dim
        << ", \"mult\": \"" << t.mult.get_str() << "\"}";
  }
  out << "], \"trace\": [";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto& t = r.trace[i];
    out << (i ? ", " : "") << "{\"q\": " << t.q << ", \"first_negative_index\": "
        << t.first_negative_index << ", \"value\": \"" << t.value.get_str() << "\"}";
  }
  out << "]";
  if (oracle) out << ", \"oracle\": " << *oracle;
  out << "}\n";
}

HilbertDecomposition parse_certificate(const std::string& text, std::size_t n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (j.is_object()) {
    if (j.contains("n") && j["n"].get<std::size_t>() != n)
      throw InvalidInput("certificate is for n = " + j["n"].dump() + ", input has n = " + std::to_string(n));
    j = j.value("certificate", nlohmann::json::array());
  }
  if (!j.is_array()) throw InvalidInput("certificate must be an array of terms");
  HilbertDecomposition c;
  c.n = n;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("shift") || !t.contains("dim") || !t.contains("mult"))
      throw InvalidInput("certificate term needs shift, dim and mult: " + t.dump());
    const auto& mult = t["mult"];
    BigInt m;
    if (mult.is_string()) {
      if (m.set_str(mult.get<std::string>(), 10) != 0) throw InvalidInput("bad multiplicity " + mult.dump());
    } else if (mult.is_number_integer()) {
      m = mult.get<long>();
    } else {
      throw InvalidInput("bad multiplicity " + mult.dump());
    }
    c.terms.push_back({t["shift"].get<long>(), t["dim"].get<long>(), m});
  }
  return c;
}

int run_depth(const Request& req, const Input& in, std::ostream& out, std::ostream& err) {
  const DepthReport r = compute_depth(req, in, err);
  const HilbertFunctionView view(in.series);
  int code = kOk;

  const auto check = validate_certificate(r.certificate, view, r.hdepth);
  if (!check.ok) {
    err << "error: emitted certificate failed validation: " << check.diagnostic << '\n';
    code = kCrossCheckFailed;
  }

  std::optional<long> oracle_p;
  if (req.oracle) {
    OracleConfig cfg{req.trunc_extra};
    const OracleResult o = max_nonneg_p(view, cfg);
    oracle_p = o.p;
    if (o.suspicious_tail)
      err << "warning: oracle series is still falling at degree " << o.inspected_degree
          << "; a larger --trunc-extra may change its answer\n";
    std::vector<std::pair<std::string, long>> others{{"oracle", o.p}};
    if (in.ideal) {
      // Also run whichever exact path was not used.
      DepthOptions opts;
      opts.parallel = req.parallel;
      opts.lexify.max_degree = req.max_degree;
      if (r.method == DepthMethod::series_path)
        others.emplace_back("algorithm1", hdepth_algorithm1(*in.ideal, opts).hdepth);
      else
        others.emplace_back("series_path", hdepth_series(view, opts).hdepth);
    }
    for (const auto& [name, p] : others)
      if (p != r.hdepth) {
        err << "error: " << name << " gives hdepth " << p << ", " << to_string(r.method)
            << " gives " << r.hdepth << '\n';
        code = kCrossCheckFailed;
      }
  }

  if (req.json) {
    print_depth_json(out, r, in.series, oracle_p);
  } else {
    print_depth_text(out, r, in.series, req.certify || req.subcommand == Subcommand::certify);
    if (oracle_p) out << "oracle = " << *oracle_p << '\n';
    if (req.subcommand == Subcommand::certify && check.ok) out << "certificate valid\n";
  }
  return code;
}

int run_certify(const Request& req, const Input& in, std::ostream& out, std::ostream& err) {
  if (!req.certificate) return run_depth(req, in, out, err);
  const HilbertDecomposition c = parse_certificate(*req.certificate, in.series.n);
  const auto check = validate_certificate(c, HilbertFunctionView(in.series));
  if (req.json) {
    out << "{\"valid\": " << (check.ok ? "true" : "false") << ", \"depth\": " << c.depth()
        << ", \"diagnostic\": " << json_string(check.diagnostic) << "}\n";
  } else if (check.ok) {
    out << "certificate valid: H(t) = " << render_decomposition(c) << "\nwitnessed hdepth >= "
        << c.depth() << '\n';
  } else {
    out << "certificate invalid: " << check.diagnostic << '\n';
  }
  return check.ok ? kOk : kCrossCheckFailed;
}

MonomialIdeal need_ideal(const Input& in, const char* sub) {
  if (!in.ideal) throw InvalidInput(std::string(sub) + " needs an ideal, not a series");
  return *in.ideal;
}

std::string json_generators(const MonomialIdeal& ideal) {
  std::string out = "[";
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + json_string(gens[i].to_string());
  return out + "]";
}

int run_lexify(const Request& req, const Input& in, std::ostream& out) {
  LexifyOptions opts;
  opts.max_degree = req.max_degree;
  const LexIdeal lex = lexify(HilbertFunctionView(in.series), opts);
  if (req.json)
    out << "{\"n\": " << lex.ideal.ring_size() << ", \"m\": " << lex.m
        << ", \"generators\": " << json_generators(lex.ideal) << "}\n";
  else
    out << lex.ideal.to_string() << "\nm=" << lex.m << '\n';
  return kOk;
}

int run_sigma(const Request& req, const Input& in, std::ostream& out, std::ostream& err) {
  const SigmaImage image = sigma_ideal(need_ideal(in, "sigma"));
  if (!image.source_strongly_stable)
    err << "warning: input is not strongly stable; the image need not share its Hilbert series\n";
  if (req.json)
    out << "{\"n\": " << image.ideal.ring_size() << ", \"m\": " << image.m
        << ", \"source_strongly_stable\": " << (image.source_strongly_stable ? "true" : "false")
        << ", \"generators\": " << json_generators(image.ideal) << "}\n";
  else
    out << image.ideal.to_string() << "\nm=" << image.m << '\n';
  return kOk;
}

int run_series(const Request& req, const Input& in, std::ostream& out) {
  if (req.json)
    out << "{\"n\": " << in.series.n << ", \"numerator\": " << json_ints(in.series.numerator.coeffs()) << "}\n";
  else
    out << "numerator = " << in.series.numerator.to_string() << "\ndenominator = (1-t)^" << in.series.n
        << '\n';
  return kOk;
}

void check_flags(const Request& req) {
  const bool depth_like = req.subcommand == Subcommand::hdepth || req.subcommand == Subcommand::certify;
  if (!depth_like && (req.oracle || req.strict_m || req.certify || req.method != Method::automatic))
    throw InvalidInput("--method, --strict-m, --oracle and --certify apply only to hdepth and certify");
  if (req.trunc_extra && !req.oracle) throw InvalidInput("--trunc-extra needs --oracle");
  if (req.certificate && req.subcommand != Subcommand::certify)
    throw InvalidInput("--certificate applies only to certify");
  if (req.max_degree == 0) throw InvalidInput("--max-degree must be positive");
}

}  // namespace

int run(const Request& req, std::ostream& out, std::ostream& err) {
  try {
    check_flags(req);
    const Input in = read_input(req.input);
    switch (req.subcommand) {
      case Subcommand::hdepth: return run_depth(req, in, out, err);
      case Subcommand::certify: return run_certify(req, in, out, err);
      case Subcommand::lexify: return run_lexify(req, in, out);
      case Subcommand::sigma: return run_sigma(req, in, out, err);
      case Subcommand::series: return run_series(req, in, out);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert depth of monomial ideals and Hilbert series", "hdx"};
  app.set_version_flag("--version", "hdx 0.1.0");

  Request req;
  std::string sub, source, method = "auto", certificate_path;
  long trunc_extra = -1;
  app.add_option("subcommand", sub, "hdepth | lexify | sigma | series | certify")
      ->required()
      ->check(CLI::IsMember({"hdepth", "lexify", "sigma", "series", "certify"}));
  app.add_option("input", source, "input file, or - for stdin")->required();
  app.add_option("--method", method, "auto | squarefree | series")
      ->check(CLI::IsMember({"auto", "squarefree", "series"}));
  app.add_flag("--strict-m", req.strict_m, "take m from the lex ideal instead of deg Q");
  app.add_flag("--oracle", req.oracle, "cross-check against the truncated-series oracle and the other exact path");
  app.add_flag("--json", req.json, "machine-readable output (includes the certificate)");
  app.add_flag("--certify", req.certify, "print the Hilbert decomposition");
  app.add_option("--max-degree", req.max_degree, "lexification degree cap")->check(CLI::PositiveNumber);
  app.add_option("--trunc-extra", trunc_extra, "oracle: coefficients inspected past deg Q (default n+1)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--certificate", certificate_path, "certify: JSON certificate file to validate");
  app.add_flag("--serial", [&req](std::int64_t) { req.parallel = false; }, "disable OpenMP kernels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  static const std::map<std::string, Subcommand> subs{{"hdepth", Subcommand::hdepth},
                                                      {"lexify", Subcommand::lexify},
                                                      {"sigma", Subcommand::sigma},
                                                      {"series", Subcommand::series},
                                                      {"certify", Subcommand::certify}};
  req.subcommand = subs.at(sub);
  req.method = method == "squarefree" ? Method::squarefree
               : method == "series"   ? Method::series
                                      : Method::automatic;
  if (trunc_extra >= 0) req.trunc_extra = trunc_extra;

  auto slurp = [&](const std::string& path, std::string& dst) {
    if (path == "-") {
      dst.assign(std::istreambuf_iterator<char>(in), {});
      return true;
    }
    std::ifstream f(path);
    if (!f) {
      err << "error: cannot read " << path << '\n';
      return false;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    dst = ss.str();
    return true;
  };
  if (!slurp(source, req.input)) return kInvalidInput;
  if (!certificate_path.empty()) {
    req.certificate.emplace();
    if (certificate_path == "-" && source == "-") {
      err << "error: input and certificate cannot both come from stdin\n";
      return kInvalidInput;
    }
    if (!slurp(certificate_path, *req.certificate)) return kInvalidInput;
  }
  return run(req, out, err);
}

}  // namespace hdx::cli
