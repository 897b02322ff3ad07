#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mattis/correlators.hpp"
#include "mattis/model.hpp"
#include "mattis/qft.hpp"
#include "mattis/thermo.hpp"
#include "verify.hpp"

using namespace mattis;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, verify_failed = 1, bad_input = 2, not_converged = 3 };

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::string units;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct RunConfig {
  ModelParams p;
  std::string beta = "inf";
  double epsilon = 1e-3;
  std::string format = "csv";
  std::string out;
  std::string exec = "parallel";
  double tol = 1e-12;

  double pmag = 1.0;
  int ntheta = 90;

  std::string fe_mode = "lattice-sum";
  std::string zero_mode = "theta";

  std::string kind = "fermion2";
  std::vector<double> x{1.0};
  double x_minus = 0;
  double t = 0;
  double tau = 0;
  int r = 1, r2 = 1, s = 1;
  bool ir = false;
  double L0 = 1.0;
  std::vector<double> eps_seq;
  std::string insertions;

  bool sweep = false;
  double gmin = -0.45, gmax = 0.95;
  int ngamma = 29;

  std::vector<int> criteria;
  bool verbose = false;
};

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_beta(const std::string& s) {
  if (s == "inf" || s == "infinity") return inf;
  std::size_t used = 0;
  double b = 0;
  try {
    b = std::stod(s, &used);
  } catch (const std::exception&) {
    throw invalid_input("beta must be a number or \"inf\"");
  }
  if (used != s.size()) throw invalid_input("beta must be a number or \"inf\"");
  return b;
}

Exec exec_of(const RunConfig& c) {
  if (c.exec == "serial") return Exec::serial;
  if (c.exec == "parallel") return Exec::parallel;
  throw invalid_input("exec must be serial or parallel");
}

cplx time_of(const RunConfig& c) {
  if (c.t != 0 && c.tau != 0) throw invalid_input("give either --t or --tau, not both");
  return c.tau != 0 ? cplx(0, -c.tau) : cplx(c.t, 0);
}

json meta_of(const RunConfig& c, const std::string& cmd) {
  json m;
  m["subcommand"] = cmd;
  m["v_F"] = c.p.v_F;
  m["gamma1"] = c.p.gamma1;
  m["gamma2"] = c.p.gamma2;
  m["a_tilde"] = c.p.a_tilde;
  m["l_over_a"] = c.p.l_over_a;
  m["beta"] = c.beta;
  m["epsilon"] = c.epsilon;
  m["tol"] = c.tol;
  m["exec"] = c.exec;
  m["threads"] = thread_count();
  return m;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void write_table(std::ostream& os, const Table& t, const json& meta, const std::string& format) {
  if (format == "json") {
    json doc;
    doc["meta"] = meta;
    doc["meta"]["units"] = t.units;
    doc["rows"] = json::array();
    for (const auto& row : t.rows) {
      json r;
      for (std::size_t i = 0; i < row.size(); ++i) {
        const Cell& c = row[i];
        if (auto d = std::get_if<double>(&c)) {
          r[t.columns[i]] = std::isfinite(*d) ? json(*d) : json(g17(*d));
        } else if (auto n = std::get_if<std::int64_t>(&c)) {
          r[t.columns[i]] = *n;
        } else {
          r[t.columns[i]] = std::get<std::string>(c);
        }
      }
      doc["rows"].push_back(r);
    }
    os << doc.dump(2) << "\n";
    return;
  }
  os << "# " << t.units;
  for (const auto& [k, v] : meta.items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  os << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      const Cell& c = row[i];
      if (auto d = std::get_if<double>(&c)) {
        os << g17(*d);
      } else if (auto n = std::get_if<std::int64_t>(&c)) {
        os << *n;
      } else {
        os << csv_field(std::get<std::string>(c));
      }
    }
    os << "\n";
  }
}

Table cmd_dispersion(const RunConfig& c) {
  if (c.ntheta < 1) throw invalid_input("ntheta must be >= 1");
  if (!(c.pmag > 0)) throw invalid_input("pmag must be positive");
  Table t;
  t.units = "theta in rad; frequencies in units of v_F |p|";
  t.columns = {"theta", "omega_plus_over_vF_p", "omega_minus_over_vF_p", "omega_tilde_over_vF_p",
               "omega_tilde_minus_over_vF_p"};
  const double scale = c.p.v_F * c.pmag;
  for (int i = 0; i < c.ntheta; ++i) {
    double th = 0.5 * pi * i / c.ntheta;
    Momentum2 q = Momentum2::real(c.pmag * std::cos(th), c.pmag * std::sin(th));
    t.rows.push_back({th, omega(1, q, c.p) / scale, omega(-1, q, c.p) / scale, omega_tilde(1, q, c.p) / scale,
                      omega_tilde(-1, q, c.p) / scale});
  }
  return t;
}

ZeroModeMode zero_mode_of(const std::string& s) {
  if (s == "theta") return ZeroModeMode::theta;
  if (s == "gaussian") return ZeroModeMode::gaussian;
  if (s == "closed") return ZeroModeMode::closed;
  throw invalid_input("zero-mode must be theta, gaussian or closed");
}

Table cmd_free_energy(const RunConfig& c) {
  const double beta = c.p.beta;
  if (!std::isfinite(beta) || !(beta > 0)) throw invalid_input("free-energy needs a finite positive beta");
  const double target = qft_free_energy_density(c.p, beta);
  const double L = c.p.L();
  Table t;
  t.units = "energies in units of v_F / a_tilde; densities are a_tilde Omega / L^2";
  if (c.fe_mode == "lattice-sum") {
    FreeEnergyBreakdown f = free_energy(c.p, beta, zero_mode_of(c.zero_mode), exec_of(c));
    double scaled = c.p.a_tilde * (f.total - f.E0) / (L * L);
    t.columns = {"zero_mode", "omega_B", "omega_Q", "E0", "total", "scaled_total", "qft_target", "rel_dev"};
    t.rows.push_back({to_string(f.mode), f.omega_B, f.omega_Q, f.E0, f.total, scaled, target,
                      std::abs(scaled - target) / std::abs(target)});
  } else if (c.fe_mode == "split-integral") {
    SplitResult s = free_energy_split(c.p, beta, std::max(c.tol, 1e-12));
    double scaled = c.p.a_tilde * (s.omega_less + s.omega_greater);
    t.columns = {"omega_less", "omega_greater", "omega_less_effective", "scaled_total", "qft_target", "rel_dev",
                 "error_estimate"};
    t.rows.push_back({s.omega_less, s.omega_greater, s.omega_less_effective, scaled, target,
                      std::abs(scaled - target) / std::abs(target), s.error_estimate});
  } else if (c.fe_mode == "qft") {
    t.columns = {"qft_target"};
    t.rows.push_back({target});
  } else {
    throw invalid_input("mode must be lattice-sum, split-integral or qft");
  }
  return t;
}

// "q,r,s,x_plus,x_minus,t;..." with t real, or "-i<tau>" for Euclidean time
std::vector<Insertion> parse_insertions(const std::string& spec) {
  std::vector<Insertion> out;
  std::stringstream all(spec);
  std::string item;
  while (std::getline(all, item, ';')) {
    if (item.empty()) continue;
    std::vector<std::string> f;
    std::stringstream one(item);
    std::string tok;
    while (std::getline(one, tok, ',')) f.push_back(tok);
    if (f.size() != 6) throw invalid_input("insertion needs q,r,s,x_plus,x_minus,t: " + item);
    try {
      cplx t = f[5].rfind("-i", 0) == 0 ? cplx(0, -std::stod(f[5].substr(2))) : cplx(std::stod(f[5]), 0);
      out.push_back({std::stoi(f[0]), std::stoi(f[1]), std::stoi(f[2]), std::stod(f[3]), std::stod(f[4]), t});
    } catch (const std::invalid_argument&) {
      throw invalid_input("malformed insertion: " + item);
    }
  }
  if (out.empty()) throw invalid_input("fermionN needs --insertions");
  return out;
}

Table cmd_correlator(const RunConfig& c) {
  const Exec ex = exec_of(c);
  const cplx tm = time_of(c);
  const CorrelatorMode mode = c.ir ? CorrelatorMode::ir_limit : CorrelatorMode::finite_L;
  Table t;
  t.units = "lengths in units of a_tilde; fermion correlators in units of 1/a_tilde, densities in 1/a_tilde^3";
  t.columns = {"x", "re", "im", "structure"};
  const bool with_eps = !c.eps_seq.empty();
  if (with_eps) {
    for (const char* col : {"eps_extrap_re", "eps_extrap_im", "eps_extrap_err"}) t.columns.push_back(col);
  }

  auto evaluate = [&](double x, double eps) -> std::pair<cplx, std::string> {
    const double xs = x * c.p.a_tilde, xm = c.x_minus * c.p.a_tilde;
    if (c.kind == "density") {
      DensityInsertion a{c.r, c.s, c.s > 0 ? xs : xm, c.s > 0 ? xm : xs, tm};
      DensityInsertion b{c.r2, c.s, 0, 0, 0.0};
      return {density_two_point(c.p, c.p.beta, a, b, eps, mode, ex), "zero-mode O(1/L) part excluded"};
    }
    if (c.kind == "fermion2") {
      CorrelatorQuery q;
      q.insertions = {{1, c.r, c.s, c.s > 0 ? xs : xm, c.s > 0 ? xm : xs, tm}, {-1, c.r, c.s, 0, 0, 0.0}};
      q.epsilon = eps;
      q.beta = c.p.beta;
      q.mode = mode;
      return {fermion_npoint(q, c.p, ex), "delta_{q1,-q2} Klein pairing"};
    }
    if (c.kind == "fermionN") {
      CorrelatorQuery q;
      q.insertions = parse_insertions(c.insertions);
      q.epsilon = eps;
      q.beta = c.p.beta;
      q.mode = mode;
      return {fermion_npoint(q, c.p, ex), "Klein pairing sum"};
    }
    if (c.kind == "qft2") {
      if (std::isfinite(c.p.beta)) throw invalid_input("qft2 is defined at beta = inf");
      QftTwoPoint v = fermion2pt_qft(c.p, c.r, xs, tm, c.L0, eps);
      return {v.value, v.distribution};
    }
    throw invalid_input("kind must be density, fermion2, fermionN or qft2");
  };

  const std::vector<double> xs = c.kind == "fermionN" ? std::vector<double>{0.0} : c.x;
  for (double x : xs) {
    auto [v, structure] = evaluate(x, c.epsilon * c.p.a_tilde);
    std::vector<Cell> row{x, v.real(), v.imag(), structure};
    if (with_eps) {
      std::vector<double> h;
      std::vector<cplx> f;
      for (double e : c.eps_seq) {
        h.push_back(e);
        f.push_back(evaluate(x, e * c.p.a_tilde).first);
      }
      Extrapolated e = extrapolate_to_zero(h, f);
      row.insert(row.end(), {e.value.real(), e.value.imag(), e.error});
    }
    t.rows.push_back(row);
  }
  return t;
}

Table cmd_cconst(const RunConfig& c) {
  Table t;
  t.units = "dimensionless";
  t.columns = {"gamma1", "gamma2", "C_gauss_kronrod", "err_gauss_kronrod", "C_tanh_sinh", "err_tanh_sinh",
               "scheme_gap"};
  auto row = [&](double g1, double g2) {
    CConstant a = c_constant(g1, g2, c.tol, QuadScheme::gauss_kronrod);
    CConstant b = c_constant(g1, g2, c.tol, QuadScheme::tanh_sinh);
    t.rows.push_back({g1, g2, a.value, a.error, b.value, b.error, std::abs(a.value - b.value)});
  };
  if (!c.sweep) {
    row(c.p.gamma1, c.p.gamma2);
    return t;
  }
  if (c.ngamma < 2) throw invalid_input("ngamma must be >= 2");
  for (int i = 0; i < c.ngamma; ++i) {
    double g = c.gmin + (c.gmax - c.gmin) * i / (c.ngamma - 1);
    row(g, g);
  }
  return t;
}

int cmd_verify(const RunConfig& c, Table& t) {
  std::ostringstream log;
  auto results = run_acceptance(std::cerr, c.verbose ? std::cerr : log, c.criteria, exec_of(c));
  t.units = "acceptance summary";
  t.columns = {"id", "name", "pass", "detail"};
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    t.rows.push_back({std::int64_t{r.id}, r.name, std::string(r.pass ? "PASS" : "FAIL"), r.detail});
  }
  return all ? ok : verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrum, free energy and correlators of the 2+1D Mattis model"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value file; flags override it");
  RunConfig c;

  app.add_option("--gamma1", c.p.gamma1, "density coupling gamma1");
  app.add_option("--gamma2", c.p.gamma2, "density coupling gamma2");
  app.add_option("--vf", c.p.v_F, "Fermi velocity");
  app.add_option("--a-tilde", c.p.a_tilde, "UV cutoff length");
  app.add_option("--l-over-a", c.p.l_over_a, "odd number of sites per direction");
  app.add_option("--beta", c.beta, "inverse temperature, a number or inf");
  app.add_option("--epsilon", c.epsilon, "point-splitting epsilon in units of a_tilde");
  app.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", c.out, "output file (default stdout)");
  app.add_option("--exec", c.exec, "serial or parallel")->check(CLI::IsMember({"serial", "parallel"}));
  app.add_option("--tol", c.tol, "quadrature tolerance");

  app.add_option("--pmag", c.pmag, "dispersion: |p|");
  app.add_option("--ntheta", c.ntheta, "dispersion: number of angles in [0, pi/2)");
  app.add_option("--mode", c.fe_mode, "free-energy: lattice-sum, split-integral or qft");
  app.add_option("--zero-mode", c.zero_mode, "free-energy: theta, gaussian or closed");
  app.add_option("--kind", c.kind, "correlator: density, fermion2, fermionN or qft2");
  app.add_option("--x", c.x, "correlator: separations x_s in units of a_tilde");
  app.add_option("--x-minus", c.x_minus, "correlator: x_{-s} in units of a_tilde");
  app.add_option("--t", c.t, "correlator: real time");
  app.add_option("--tau", c.tau, "correlator: Euclidean time, t = -i tau");
  app.add_option("--r", c.r, "correlator: chirality r (first insertion)");
  app.add_option("--r2", c.r2, "correlator: chirality of the second density insertion");
  app.add_option("--s", c.s, "correlator: family s");
  app.add_flag("--ir", c.ir, "correlator: IR limit by extrapolation in 1/L");
  app.add_option("--L0", c.L0, "correlator qft2: renormalization length");
  app.add_option("--eps-seq", c.eps_seq, "correlator: epsilon sequence (units of a_tilde) to extrapolate to 0");
  app.add_option("--insertions", c.insertions, "fermionN: q,r,s,x_plus,x_minus,t;...");
  app.add_flag("--sweep", c.sweep, "cconst: sweep C(gamma, gamma)");
  app.add_option("--gamma-min", c.gmin, "cconst sweep start");
  app.add_option("--gamma-max", c.gmax, "cconst sweep end");
  app.add_option("--ngamma", c.ngamma, "cconst sweep points");
  app.add_option("--criteria", c.criteria, "verify: criterion ids (default all)");
  app.add_flag("--verbose", c.verbose, "verify: print diagnostics");

  std::vector<CLI::App*> subs;
  for (const char* name : {"dispersion", "free-energy", "correlator", "cconst", "verify"})
    subs.push_back(app.add_subcommand(name)->fallthrough());
  subs[0]->description("omega_+-(theta) / (v_F |p|) over [0, pi/2)");
  subs[1]->description("boson, zero-mode and ground-state free energy against the QFT limit");
  subs[2]->description("density and fermion correlation functions");
  subs[3]->description("the renormalization constant C by two quadrature schemes");
  subs[4]->description("run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  Table table;
  int status = ok;
  try {
    c.p.beta = parse_beta(c.beta);
    if (cmd != "verify") {
      ModelParams check = c.p;
      if (cmd == "dispersion" || cmd == "cconst") check.l_over_a = std::max<std::int64_t>(check.l_over_a, 1);
      if (auto bad = validate_params(check)) throw invalid_input(*bad);
    }
    if (cmd == "dispersion") {
      table = cmd_dispersion(c);
    } else if (cmd == "free-energy") {
      table = cmd_free_energy(c);
    } else if (cmd == "correlator") {
      table = cmd_correlator(c);
    } else if (cmd == "cconst") {
      table = cmd_cconst(c);
    } else {
      status = cmd_verify(c, table);
    }
  } catch (const invalid_input& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return bad_input;
  } catch (const non_convergence& e) {
    std::cerr << "no convergence: " << e.what() << " (achieved error " << e.achieved_error << ")\n";
    return not_converged;
  }

  json meta = meta_of(c, cmd);
  if (c.out.empty()) {
    write_table(std::cout, table, meta, c.format);
  } else {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "cannot open " << c.out << "\n";
      return bad_input;
    }
    write_table(f, table, meta, c.format);
  }
  return status;
}
