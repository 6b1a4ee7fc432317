#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "iwasawa/ideals.hpp"
#include "iwasawa/lvalues.hpp"
#include "iwasawa/padic.hpp"
#include "iwasawa/stick.hpp"
#include "suites.hpp"

using namespace iwasawa;
using iwasawa::cli::Json;

namespace {

struct Globals {
  std::optional<i64> p;
  std::optional<int> n;
  std::optional<int> prec;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out;
  std::string format = "json";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& body) {
  if (g.out.empty() || g.out == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw UsageError("cannot open " + g.out);
  f << body;
}

std::string render(const Globals& g, const cli::Report& r) {
  if (g.format == "csv") return r.to_csv();
  return r.to_json().dump(2) + "\n";
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

cli::Report single(const std::string& name, Json params, bool pass, Json data, std::uint64_t seed) {
  cli::Report r{name, std::move(params), {}, seed};
  r.checks.push_back({name, pass, std::move(data)});
  return r;
}

Json zmod_json(const ZmodGR& x) {
  Json a = Json::array();
  for (i64 c : to_vector(x)) a.push_back(c);
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stickelberger elements, Iwasawa ideals and cyclotomic units: verification driver"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--p", g.p, "odd prime");
  app.add_option("--n", g.n, "tower level");
  app.add_option("--prec", g.prec, "p-adic precision");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  cli::SuiteConfig sc;
  std::string l_list;
  auto* suite = app.add_subcommand("suite", "run a named verification suite")->fallthrough();
  suite->add_option("name", sc.suite, "suite name")->required();
  suite->add_option("--samples", sc.samples, "sample count (fields for dbar-annihilation)");
  suite->add_option("--f-max", sc.f_max, "conductor or discriminant bound");
  suite->add_option("--l", l_list, "comma separated moduli for efe");
  suite->add_option("--tol", sc.tol, "tolerance for efe");
  suite->add_option("--field", sc.field, "Q, cyclotomic:m or quadratic:D");
  suite->add_option("--stabilize", sc.stabilize, "quiet primes before Dbar is declared stable");
  suite->add_option("--cap", sc.cap, "maximum number of primes");

  auto* list = app.add_subcommand("list", "list suite names");

  i64 theta_r = 0;
  auto* theta_cmd = app.add_subcommand("theta", "Stickelberger element of conductor r")->fallthrough();
  theta_cmd->add_option("--r", theta_r)->required();

  i64 efe_l = 0;
  double efe_tol = 1e-9;
  auto* efe_cmd = app.add_subcommand("efe", "equivariant functional equation residual")->fallthrough();
  efe_cmd->add_option("--l", efe_l)->required();
  efe_cmd->add_option("--tol", efe_tol);

  auto* three_cmd = app.add_subcommand("three-ideal", "the three ideals at (p, n)")->fallthrough();
  auto* fsn_cmd = app.add_subcommand("fsn", "fS_n via the closed formula")->fallthrough();

  int pl_j = 0;
  auto* pl_cmd = app.add_subcommand("padic-l", "truncation of f_j")->fallthrough();
  pl_cmd->add_option("--j", pl_j)->required();

  std::string dbar_field = "Q";
  int dbar_stab = 10, dbar_cap = 200;
  auto* dbar_cmd = app.add_subcommand("dbar", "sample the ideal Dbar_n")->fallthrough();
  dbar_cmd->add_option("--field", dbar_field);
  dbar_cmd->add_option("--stabilize", dbar_stab);
  dbar_cmd->add_option("--cap", dbar_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cli::Report rep;
    if (*list) {
      for (const auto& s : cli::suite_names()) std::cout << s << "\n";
      return 0;
    } else if (*suite) {
      sc.p = g.p;
      sc.n = g.n;
      sc.prec = g.prec;
      sc.seed = g.seed;
      sc.threads = g.threads;
      if (!l_list.empty()) {
        std::stringstream ss(l_list);
        for (std::string tok; std::getline(ss, tok, ',');) {
          try {
            sc.l.push_back(std::stoll(tok));
          } catch (const std::exception&) {
            throw UsageError("bad --l entry: " + tok);
          }
        }
      }
      rep = cli::run_suite(sc);
    } else if (*theta_cmd) {
      auto t = theta(theta_r);
      Json c = Json::array();
      for (const auto& q : t.value.coeffs()) c.push_back(q.get_str());
      Json reps = Json::array();
      for (i64 a : t.value.group().reps()) reps.push_back(a);
      rep = single("theta", Json{{"r", theta_r}}, t.matches_characters,
                   Json{{"sigma", reps}, {"coefficients", c}, {"sum_equals_characters", t.matches_characters}}, g.seed);
    } else if (*efe_cmd) {
      auto r = equivariant_fe_check(efe_l);
      const double res = static_cast<double>(r.residual);
      if (g.format == "csv") {
        // one row per group element
        std::ostringstream os;
        os.precision(17);
        os << "l,sigma,lhs_re,lhs_im,rhs_re,rhs_im,residual\n";
        for (int i = 0; i < r.lhs.size(); ++i)
          os << efe_l << ',' << r.lhs.group().rep(i) << ',' << static_cast<double>(r.lhs[i].real()) << ','
             << static_cast<double>(r.lhs[i].imag()) << ',' << static_cast<double>(r.rhs[i].real()) << ','
             << static_cast<double>(r.rhs[i].imag()) << ',' << static_cast<double>(std::abs(r.lhs[i] - r.rhs[i]))
             << '\n';
        emit(g, os.str());
        return res < efe_tol ? 0 : 1;
      }
      rep = single("efe", Json{{"l", efe_l}, {"tol", efe_tol}}, res < efe_tol, Json{{"residual", res}}, g.seed);
    } else if (*three_cmd) {
      const i64 p = need(g.p, "--p");
      const int n = need(g.n, "--n");
      auto r = three_ideal_lemma_check(p, n);
      rep = single("three-ideal", Json{{"p", p}, {"n", n}}, r.equal && r.equal_at_precision,
                   Json{{"M", r.M}, {"equal_mod_p^(n+1)", r.equal}, {"equal_mod_p^M", r.equal_at_precision},
                        {"log_index", r.gen_ideal.lattice().log_index()}},
                   g.seed);
    } else if (*fsn_cmd) {
      const i64 p = need(g.p, "--p");
      const int n = need(g.n, "--n");
      const int M = g.prec.value_or(n + 4);
      auto s = fS_via_formula(p, n, M);
      rep = single("fsn", Json{{"p", p}, {"n", n}, {"M", M}},
                   s.theta_tilde_integral && s.principal && s.in_minus_part,
                   Json{{"theta_tilde", zmod_json(s.theta_tilde)}, {"principal", s.principal},
                        {"in_minus_part", s.in_minus_part}, {"log_index_in_minus", s.index_in_minus}},
                   g.seed);
    } else if (*pl_cmd) {
      const i64 p = need(g.p, "--p");
      const int n = need(g.n, "--n");
      const int M = g.prec.value_or(3);
      auto f = padic_L_truncation(p, pl_j, n, M);
      Json d{{"gamma_coeffs", f.gamma_coeffs}, {"T_coeffs", f.T_coeffs}, {"mu_zero", f.mu_zero()}};
      bool ok = true;
      try {
        d["lambda"] = f.lambda();
      } catch (const std::runtime_error&) {
        d["lambda"] = "undetermined";
        ok = false;
      }
      rep = single("padic-l", Json{{"p", p}, {"j", pl_j}, {"n", n}, {"M", M}}, ok, d, g.seed);
    } else if (*dbar_cmd) {
      const i64 p = need(g.p, "--p");
      const int n = need(g.n, "--n");
      SampleOptions o;
      o.stabilize = dbar_stab;
      o.cap = dbar_cap;
      auto K = cli::parse_field(dbar_field);
      auto D = sample_dbar(make_tower(K, p, n), o);
      Json rows = Json::array();
      for (const auto& b : D.lattice.basis_mod()) rows.push_back(zmod_json(b));
      rep = single("dbar", Json{{"field", K.describe()}, {"p", p}, {"n", n}, {"stabilize", dbar_stab}, {"cap", dbar_cap}},
                   D.stabilized,
                   Json{{"primes", D.primes}, {"stabilized", D.stabilized},
                        {"log_index", D.lattice.lattice().log_index()}, {"basis", rows}},
                   g.seed);
    }
    emit(g, render(g, rep));
    return rep.all_pass() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
