#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "minrep/errors.hpp"
#include "minrep/group.hpp"
#include "minrep/inversion.hpp"
#include "minrep/kernel.hpp"
#include "minrep/profile.hpp"
#include "minrep/radial.hpp"
#include "minrep/verify.hpp"

namespace {

using minrep::cplx;
using json = nlohmann::ordered_json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

/// Malformed user input; maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

/// Number with optional "pi" factor: "1.5", "pi", "-pi", "2pi", "0.5*pi".
double parse_number(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw UsageError("empty number");
  double factor = 1.0;
  const auto p = s.find("pi");
  if (p != std::string::npos && p + 2 == s.size()) {
    factor = std::numbers::pi;
    s = trim(s.substr(0, p));
    if (!s.empty() && s.back() == '*') s.pop_back();
    if (s.empty() || s == "+") return factor;
    if (s == "-") return -factor;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + raw + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + raw + "'");
  return v * factor;
}

cplx parse_complex(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return {parse_number(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_number(parts[0]), parse_number(parts[1])};
  throw UsageError("expected 're,im', got '" + s + "'");
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

/// Rows of numbers from a file path or an inline list separated by ';'.
std::vector<std::vector<double>> parse_rows(const std::string& source) {
  std::vector<std::string> lines;
  if (std::filesystem::is_regular_file(source))
    lines = read_lines(source);
  else
    lines = split(source, ';');
  std::vector<std::vector<double>> rows;
  for (const auto& raw : lines) {
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    try {
      for (const auto& f : split(line, ',')) row.push_back(parse_number(f));
    } catch (const UsageError&) {
      if (rows.empty()) continue;  // header row
      throw;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

// ---- eval -------------------------------------------------------------------------------

struct EvalArgs {
  std::string kind;
  int m = 3;
  int l = 0;
  std::string t;
  std::string points;
};

std::string run_eval(const EvalArgs& a) {
  const minrep::ModelParams params(a.m);
  const auto rows = parse_rows(a.points);
  if (rows.empty()) throw UsageError("no evaluation points");
  std::ostringstream out;
  std::size_t width = 0;
  if (a.kind == "radial") {
    width = 2;
    out << "r,rp";
  } else if (a.kind == "full" || a.kind == "inversion") {
    width = 2 * static_cast<std::size_t>(a.m);
    for (int i = 1; i <= a.m; ++i) out << (i > 1 ? "," : "") << "x" << i;
    for (int i = 1; i <= a.m; ++i) out << ",y" << i;
  } else if (a.kind == "cone") {
    width = 2 * static_cast<std::size_t>(a.m + 1);
    for (int i = 1; i <= a.m + 1; ++i) out << (i > 1 ? "," : "") << "z" << i;
    for (int i = 1; i <= a.m + 1; ++i) out << ",w" << i;
  }
  out << ",re,im\n";
  const bool needs_t = a.kind == "radial" || a.kind == "full";
  if (needs_t && a.t.empty()) throw UsageError("--t is required for kind " + a.kind);
  std::optional<minrep::ComplexTime> t;
  if (needs_t) t.emplace(parse_complex(a.t));
  for (const auto& row : rows) {
    if (row.size() != width)
      throw UsageError("point row has " + std::to_string(row.size()) + " values, expected " + std::to_string(width));
    cplx v;
    const std::size_t h = width / 2;
    if (a.kind == "radial") {
      v = minrep::radial_kernel(row[0], row[1], *t, a.l, params);
    } else if (a.kind == "cone") {
      const minrep::ConePoint z{{row.begin(), row.begin() + h}};
      const minrep::ConePoint w{{row.begin() + h, row.end()}};
      v = minrep::cone_inversion_kernel(z, w, params);
    } else {
      const minrep::SpatialPoint x{{row.begin(), row.begin() + h}};
      const minrep::SpatialPoint y{{row.begin() + h, row.end()}};
      v = a.kind == "full" ? minrep::full_kernel(x, y, *t, params) : minrep::inversion_kernel(x, y, params).value;
    }
    for (double c : row) out << fmt(c) << ",";
    out << fmt(v.real()) << "," << fmt(v.imag()) << "\n";
  }
  return out.str();
}

// ---- transform ----------------------------------------------------------------------------

struct TransformArgs {
  std::string op;
  int m = 3;
  int l = 0;
  int nu = 1;
  std::string t;
  std::string s;
  std::string input;
  std::string output;
  std::string decay;
  std::optional<double> leading_power;
  int quad_n = 200;
};

/// Trapezoid weights on arbitrary increasing nodes; only used for bookkeeping.
std::vector<double> trapezoid_weights(const std::vector<double>& r) {
  std::vector<double> w(r.size(), 0.0);
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double h = 0.5 * (r[i + 1] - r[i]);
    w[i] += h;
    w[i + 1] += h;
  }
  return w;
}

minrep::DecayCertificate parse_decay(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw UsageError("--decay expects kind:rate, e.g. exp:2 or gauss:0.5");
  minrep::DecayCertificate d;
  if (parts[0] == "exp")
    d.kind = minrep::DecayKind::exponential;
  else if (parts[0] == "gauss")
    d.kind = minrep::DecayKind::gaussian;
  else
    throw UsageError("unknown decay kind '" + parts[0] + "'");
  d.rate = parse_number(parts[1]);
  if (!(d.rate > 0.0)) throw UsageError("decay rate must be positive");
  return d;
}

/// Conservative exponential envelope from the chord between the peak and the
/// last sample. Fails unless the samples have decayed to 1e-12 of the peak.
minrep::DecayCertificate infer_decay(const std::vector<double>& r, const std::vector<cplx>& v) {
  std::size_t ipk = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[ipk])) ipk = i;
  const double peak = std::abs(v[ipk]);
  if (peak == 0.0) return {minrep::DecayKind::exponential, 1.0};
  std::size_t last = v.size() - 1;
  while (last > ipk && std::abs(v[last]) < 1e-300) --last;
  const double tail = std::abs(v.back());
  if (tail > 1e-12 * peak || last == ipk)
    throw minrep::DomainError("cannot certify decay: last sample is " + fmt(tail / peak) + " of the peak");
  const double rate = 0.8 * (std::log(peak) - std::log(std::abs(v[last]))) / (r[last] - r[ipk]);
  return {minrep::DecayKind::exponential, rate};
}

std::string run_transform(const TransformArgs& a) {
  const auto rows = parse_rows(a.input);
  if (rows.empty()) throw UsageError("input '" + a.input + "' has no samples");
  std::vector<double> r;
  std::vector<cplx> v;
  for (const auto& row : rows) {
    if (row.size() != 2 && row.size() != 3) throw UsageError("input rows must be r,value or r,re,im");
    if (!r.empty() && !(row[0] > r.back())) throw UsageError("input nodes must be strictly increasing");
    if (row[0] < 0.0) throw UsageError("input nodes must be non-negative");
    r.push_back(row[0]);
    v.emplace_back(row[1], row.size() == 3 ? row[2] : 0.0);
  }
  if (r.size() < minrep::InterpolationStencil::width)
    throw UsageError("input needs at least " + std::to_string(minrep::InterpolationStencil::width) + " samples");
  const minrep::DecayCertificate decay = a.decay.empty() ? infer_decay(r, v) : parse_decay(a.decay);
  // Interpolate v / r^p in r, where r^p is the expected behaviour at the origin.
  const double p = a.leading_power ? *a.leading_power
                                   : (a.op == "hankel" || a.op == "dirac" ? a.nu + 0.5 : static_cast<double>(a.l));
  std::vector<double> gr;
  std::vector<cplx> gv;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (p != 0.0 && r[i] == 0.0) continue;
    gr.push_back(r[i]);
    gv.push_back(p == 0.0 ? v[i] : v[i] / std::pow(r[i], p));
  }
  if (gr.size() < minrep::InterpolationStencil::width)
    throw UsageError("input needs at least " + std::to_string(minrep::InterpolationStencil::width) + " samples");
  auto samples = std::make_shared<minrep::SampledProfile>(
      minrep::SampledProfile{minrep::RadialRule{gr, trapezoid_weights(gr)}, gv, decay});
  const minrep::ProfileFunction in{[samples, p](double x) {
                                     const cplx g = minrep::interpolate_profile(*samples, x, minrep::InterpolationVariable::r);
                                     return p == 0.0 ? g : g * std::pow(x, p);
                                   },
                                   decay};

  minrep::ApplyOptions opts;
  opts.quad_n = a.quad_n;
  std::vector<cplx> out;
  std::ostringstream meta;
  meta << "# op=" << a.op;
  if (a.op == "semigroup") {
    if (a.t.empty()) throw UsageError("--t is required for op semigroup");
    const minrep::ModelParams params(a.m);
    const minrep::ComplexTime t(parse_complex(a.t));
    out = minrep::apply_radial_semigroup(in, t, a.l, params, r, opts);
    meta << " m=" << a.m << " l=" << a.l << " t=" << fmt(t.value().real()) << "," << fmt(t.value().imag());
  } else if (a.op == "inversion") {
    const minrep::ModelParams params(a.m);
    opts = minrep::boundary_options();
    if (a.quad_n != 200) opts.quad_n = a.quad_n;
    out = minrep::apply_inversion_radial(in, a.l, params, r, opts);
    meta << " m=" << a.m << " l=" << a.l;
  } else if (a.op == "hankel") {
    opts = minrep::boundary_options();
    if (a.quad_n != 200) opts.quad_n = a.quad_n;
    out = minrep::hankel_transform(in, a.nu, r, opts);
    meta << " nu=" << a.nu;
  } else if (a.op == "dirac") {
    if (a.s.empty()) throw UsageError("--s is required for op dirac");
    const cplx s = parse_complex(a.s);
    out = minrep::dirac_operator(in, s, a.nu, r, opts);
    meta << " nu=" << a.nu << " s=" << fmt(s.real()) << "," << fmt(s.imag());
  }
  std::ostringstream text;
  text << meta.str() << "\n";
  text << "# quad_n=" << opts.quad_n << " prune=" << fmt(opts.prune) << " decay="
       << (decay.kind == minrep::DecayKind::exponential ? "exp:" : "gauss:") << fmt(decay.rate) << "\n";
  text << "r,re,im\n";
  for (std::size_t i = 0; i < r.size(); ++i)
    text << fmt(r[i]) << "," << fmt(out[i].real()) << "," << fmt(out[i].imag()) << "\n";
  return text.str();
}

// ---- bruhat -----------------------------------------------------------------------------------

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json matrix_json(const Eigen::MatrixXd& g) {
  json a = json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < g.cols(); ++j) row.push_back(g(i, j));
    a.push_back(row);
  }
  return a;
}

minrep::LorentzMatrix read_matrix(const std::string& path, int m) {
  json doc;
  try {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("matrix")) doc = doc["matrix"];
  std::vector<double> flat;
  try {
    if (!doc.is_array()) throw UsageError("matrix must be a JSON array");
    for (const auto& e : doc) {
      if (e.is_array())
        for (const auto& x : e) flat.push_back(x.get<double>());
      else
        flat.push_back(e.get<double>());
    }
  } catch (const json::exception&) {
    throw UsageError("matrix entries must be numbers");
  }
  const int n = m + 3;
  if (static_cast<int>(flat.size()) != n * n)
    throw UsageError("matrix has " + std::to_string(flat.size()) + " entries, expected " + std::to_string(n * n));
  minrep::LorentzMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = flat[static_cast<std::size_t>(i * n + j)];
  return g;
}

std::string run_bruhat(const std::string& path, int m) {
  if (m < 3 || m % 2 == 0) throw UsageError("--m must be odd and at least 3");
  const minrep::ModelParams params(m);
  const minrep::LorentzMatrix g = read_matrix(path, m);
  json out;
  try {
    const minrep::BruhatFactors f = minrep::bruhat_factor(g, params);
    out["in_parabolic"] = false;
    out["b"] = vector_json(f.b);
    out["t"] = f.t;
    out["delta"] = f.delta;
    out["m_plus"] = matrix_json(f.m_plus);
    out["a"] = vector_json(f.a);
    out["reconstruction_error"] = f.reconstruction_error;
  } catch (const minrep::InParabolicError&) {
    out["in_parabolic"] = true;
  }
  return out.dump(2, ' ', false, json::error_handler_t::strict) + "\n";
}

// ---- verify -----------------------------------------------------------------------------------

json report_json(const minrep::VerificationReport& r) {
  json out;
  out["suite"] = r.suite;
  json cases = json::array();
  for (const auto& c : r.cases) {
    json jc;
    jc["id"] = c.id;
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    jc["params"] = params;
    // Infinite errors (exceptions) have no JSON number; they are reported as null.
    jc["error"] = std::isfinite(c.error) ? json(c.error) : json(nullptr);
    jc["tol"] = c.tol;
    jc["pass"] = c.pass;
    cases.push_back(jc);
  }
  out["cases"] = cases;
  out["summary"] = {{"passed", r.passed}, {"failed", r.failed}, {"total", r.passed + r.failed}};
  out["wall_seconds"] = r.wall_seconds;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernels, transforms and identity checks for the minimal representation of O(m+1, 2)"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate kernels at points; CSV on stdout");
  eval->add_option("--kind", ea.kind, "Kernel kind")->required()->check(CLI::IsMember({"full", "radial", "inversion", "cone"}));
  eval->add_option("--m", ea.m, "Dimension m")->check(CLI::Range(2, 64));
  eval->add_option("--l", ea.l, "Angular degree (radial kind)")->check(CLI::NonNegativeNumber);
  eval->add_option("--t", ea.t, "Time as re,im (accepts pi)");
  eval->add_option("--points", ea.points, "File or inline rows separated by ';'")->required();

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Apply a transform to CSV samples (r,value)");
  transform->add_option("--op", ta.op, "Transform")->required()->check(CLI::IsMember({"semigroup", "inversion", "hankel", "dirac"}));
  transform->add_option("--m", ta.m, "Dimension m")->check(CLI::Range(2, 64));
  transform->add_option("--l", ta.l, "Angular degree")->check(CLI::NonNegativeNumber);
  transform->add_option("--nu", ta.nu, "Bessel order for hankel and dirac")->check(CLI::PositiveNumber);
  transform->add_option("--t", ta.t, "Semigroup time re,im");
  transform->add_option("--s", ta.s, "Dirac parameter re,im");
  transform->add_option("--input", ta.input, "Input CSV")->required();
  transform->add_option("--output", ta.output, "Output CSV (default stdout)");
  transform->add_option("--decay", ta.decay, "Envelope exp:rate or gauss:rate (inferred when absent)");
  transform->add_option("--leading-power", ta.leading_power,
                         "Power p with value ~ r^p at the origin, factored out before interpolation "
                         "(default nu+1/2 for hankel and dirac, l otherwise)");
  transform->add_option("--quad-n", ta.quad_n, "Quadrature order")->envname("MINREP_QUAD_N")->check(CLI::Range(8, 100000));

  std::string matrix_path;
  int bruhat_m = 3;
  auto* bruhat = app.add_subcommand("bruhat", "Bruhat factors of a group element; JSON on stdout");
  bruhat->add_option("--matrix", matrix_path, "JSON file with the (m+3)^2 entries, row-major")->required();
  bruhat->add_option("--m", bruhat_m, "Dimension m (odd)");

  std::string suite;
  std::string report_path;
  minrep::VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run an identity suite; JSON report");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--m", vo.m, "Restrict to one dimension");
  verify->add_option("--tol", vo.tol, "Override every tolerance")->envname("MINREP_TOL");
  verify->add_option("--quad-n", vo.quad_n, "Quadrature order")->envname("MINREP_QUAD_N")->check(CLI::Range(8, 100000));
  verify->add_option("--output", report_path, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) {
      write_output("", run_eval(ea));
    } else if (*transform) {
      write_output(ta.output, run_transform(ta));
    } else if (*bruhat) {
      write_output("", run_bruhat(matrix_path, bruhat_m));
    } else if (*verify) {
      const auto& names = minrep::suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      const minrep::VerificationReport report = minrep::run_suite(suite, vo);
      write_output(report_path, report_json(report).dump(2) + "\n");
      std::cerr << report.suite << ": " << report.passed << " passed, " << report.failed << " failed\n";
      return report.all_passed() ? 0 : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const minrep::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const minrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
