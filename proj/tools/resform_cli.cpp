// Command-line surface over the library.  Every subcommand maps to one
// library operation; --json wraps the payload in a stable envelope.
// Exit codes: 0 pass, 1 failed mathematical assertion, 2 usage error.

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "resform/resform.hpp"

using namespace resform;
using ojson = nlohmann::ordered_json;

namespace {

struct Output {
  ojson result;
  std::vector<std::string> lines;
  bool pass = true;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

ojson set_json(const FSet& A) { return ojson(A.members); }

ojson cplx_json(cplx z) { return ojson::array({z.real(), z.imag()}); }

std::string set_str(const FSet& A) {
  std::string s = "{";
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(A.members[i]);
  }
  return s + "}";
}

CFunction random_cfn(u64 m, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  CFunction f(m);
  for (auto& v : f.values) v = {dist(rng), dist(rng)};
  return f;
}

IntFunction random_ifn(u64 m, std::mt19937_64& rng, i64 lo = -3, i64 hi = 3) {
  IntFunction f(m);
  for (auto& v : f.values)
    v = lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo + 1));
  return f;
}

// One pass of every algebraic identity the library asserts, at prime p.
// Returns (per-identity flags, first failing name or "").
std::pair<ojson, std::string> identity_pass(u64 p, std::mt19937_64& rng) {
  PrimeField F(p);
  ojson r;
  std::string failed;
  auto note = [&](const char* name, bool ok) {
    r[name] = ok;
    if (!ok && failed.empty()) failed = name;
  };

  const double tol = 1e-6 * static_cast<double>(p);

  {  // Parseval for the additive Fourier transform
    CFunction f = random_cfn(p, rng);
    CFunction fh = fourier(f);
    double lhs = 0, rhs = 0;
    for (u64 x = 0; x < p; ++x) {
      lhs += std::norm(f.values[x]);
      rhs += std::norm(fh.values[x]);
    }
    note("parseval", std::abs(static_cast<double>(p) * lhs - rhs) <= tol * (1 + rhs));
  }
  {  // transform of a convolution is the pointwise product
    CFunction f = random_cfn(p, rng), g = random_cfn(p, rng);
    CFunction lhs = fourier(convolve_star(f, g));
    CFunction fh = fourier(f), gh = fourier(g);
    bool ok = true;
    for (u64 x = 0; x < p; ++x)
      if (std::abs(lhs.values[x] - fh.values[x] * gh.values[x]) > tol * p) ok = false;
    note("convolution_fourier", ok);
  }
  {  // sum of paired correlations equals sum of (f o g)^{k+1}, exact
    const u64 m = p <= 64 ? p : 13;
    IntFunction f = random_ifn(m, rng), g = random_ifn(m, rng);
    IntFunction fg = convolve_circ(f, g);
    bool ok = true;
    for (int k = 1; k <= 3; ++k) {
      i64 rhs = 0;
      for (i64 v : fg.values) {
        i64 t = 1;
        for (int i = 0; i <= k; ++i) t *= v;
        rhs += t;
      }
      if (correlation_pairing(f, g, k) != rhs) ok = false;
    }
    note("energy_correlation", ok);
  }
  {  // chi o chi = p delta_0 - 1 and chi * chi = chi(-1)(p delta_0 - 1), exact
    IntFunction chi = legendre_function(F);
    IntFunction c = convolve_circ(chi, chi), s = convolve_star(chi, chi);
    const i64 cm1 = F.legendre(p - 1);
    bool ok = true;
    for (u64 x = 0; x < p; ++x) {
      i64 base = (x == 0 ? static_cast<i64>(p) : 0) - 1;
      if (c.values[x] != base || s.values[x] != cm1 * base) ok = false;
    }
    note("chi_convolution", ok);
  }
  {  // closed form of (R o R) off zero vs direct enumeration
    IntFunction rr =
        convolve_circ(indicator(F.residues()), indicator(F.residues()));
    bool ok = true;
    for (u64 x = 1; x < p; ++x)
      if (r_circ_r(F, x) != rr.values[x]) ok = false;
    note("r_circ_r", ok);
  }
  note("rho_convolution",
       rho_conv_identity(F, random_ifn(p, rng), random_ifn(p, rng)));
  {  // p ||f||^2 = <f>^2 + ||f o chi||^2, exact
    IntFunction f = random_ifn(p, rng);
    IntFunction fc = convolve_circ(f, legendre_function(F));
    note("cs_chi", static_cast<i64>(p) * f.l2sq() ==
                       f.sum() * f.sum() + fc.l2sq());
  }
  {
    IntFunction psi = random_ifn(p, rng, -4, 4);
    i64 c = 0;
    while (c == 0) c = -2 + static_cast<i64>(rng() % 6);
    DivCReport d = div_c_report(psi, c);
    note("div_c", d.identity_ok && d.inequality_ok);
  }
  {
    ChiSystem sys(F);
    u64 lam = 1 + rng() % (p - 1), mu = 1 + rng() % (p - 1), s = rng() % p;
    TildeSuiteReport t = tilde_identity_suite(F, random_cfn(p, rng),
                                              random_cfn(p, rng), lam, mu, s, sys);
    note("tilde_suite", t.all_ok());
  }
  return {r, failed};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadratic-residue sumset toolkit"};
  app.require_subcommand(1);

  u64 p = 0, modn = 0, q = 0, x_arg = 0, seed = 0;
  u64 p_min = 3, p_max = 100;
  u64 budget = 1'000'000'000;
  u64 j1 = 0, j2 = 0, trials = 100;
  int k_arg = 2;
  std::string mode = "restricted", out_path;
  bool json = false, parallel = false;
  std::vector<u64> set_a, set_b, shifts;

  auto add_prime = [&](CLI::App* c) {
    c->add_option("-p,--prime", p, "odd prime modulus")->required();
  };
  auto add_mod = [&](CLI::App* c) {
    c->add_option("--mod", modn, "modulus")->required();
  };
  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", json, "machine-readable output");
    c->add_option("--seed", seed, "PRNG seed");
  };
  auto add_mode = [&](CLI::App* c) {
    c->add_option("--mode", mode, "sumset mode")
        ->check(CLI::IsMember({"standard", "restricted"}));
  };

  CLI::App* c_res = app.add_subcommand("residues", "quadratic residues of F_p");
  add_prime(c_res); add_common(c_res);

  CLI::App* c_leg = app.add_subcommand("legendre", "Legendre symbol chi(x)");
  add_prime(c_leg); add_common(c_leg);
  c_leg->add_option("x", x_arg, "argument")->required();

  CLI::App* c_gauss = app.add_subcommand("gauss", "Gauss sum G(p)");
  add_prime(c_gauss); add_common(c_gauss);

  CLI::App* c_jac = app.add_subcommand("jacobi", "Jacobi sum J(chi_j1, chi_j2)");
  add_prime(c_jac); add_common(c_jac);
  c_jac->add_option("--j1", j1, "first character index (default Legendre)");
  c_jac->add_option("--j2", j2, "second character index (default Legendre)");

  CLI::App* c_weil = app.add_subcommand("weil", "shifted-character sum and bound");
  add_prime(c_weil); add_common(c_weil);
  c_weil->add_option("--shifts", shifts, "nonzero distinct shifts")
      ->required()->delimiter(',');

  CLI::App* c_sigma = app.add_subcommand("sigma", "sigma(A,B) character sum");
  add_prime(c_sigma); add_common(c_sigma);
  c_sigma->add_option("--set-a", set_a, "set A")->required()->delimiter(',');
  c_sigma->add_option("--set-b", set_b, "set B")->required()->delimiter(',');
  c_sigma->add_option("--index", j1, "character index (default Legendre)");

  CLI::App* c_energy = app.add_subcommand("energy", "additive energy E_k(A)");
  add_mod(c_energy); add_common(c_energy);
  c_energy->add_option("--set", set_a, "set A")->required()->delimiter(',');
  c_energy->add_option("-k", k_arg, "energy order (default 2)");

  CLI::App* c_pds = app.add_subcommand("pds", "perfect difference set test");
  add_mod(c_pds); add_common(c_pds);
  c_pds->add_option("--set", set_a, "set A")->required()->delimiter(',');

  CLI::App* c_mult = app.add_subcommand("multipliers", "multiplier group of A");
  add_mod(c_mult); add_common(c_mult);
  c_mult->add_option("--set", set_a, "set A")->required()->delimiter(',');

  CLI::App* c_singer = app.add_subcommand("singer", "Singer difference set");
  add_common(c_singer);
  c_singer->add_option("-q", q, "prime order")->required();

  CLI::App* c_sum = app.add_subcommand("sumset", "A+B or restricted A+^A");
  add_mod(c_sum); add_common(c_sum); add_mode(c_sum);
  c_sum->add_option("--set-a", set_a, "set A")->required()->delimiter(',');
  c_sum->add_option("--set-b", set_b, "set B (standard mode, default A)")
      ->delimiter(',');

  CLI::App* c_diag = app.add_subcommand("diagnostics", "candidate diagnostics");
  add_prime(c_diag); add_common(c_diag);
  c_diag->add_option("--set", set_a, "set A")->required()->delimiter(',');

  CLI::App* c_clique = app.add_subcommand("clique", "Paley clique number");
  add_prime(c_clique); add_common(c_clique);

  CLI::App* c_tilde = app.add_subcommand("tilde-check", "tilde-transform suite");
  add_prime(c_tilde); add_common(c_tilde);

  CLI::App* c_efun = app.add_subcommand("efun", "E_A = (A o chi) report");
  add_prime(c_efun); add_common(c_efun);
  c_efun->add_option("--set", set_a, "set A")->required()->delimiter(',');

  CLI::App* c_unc = app.add_subcommand("uncertainty", "support uncertainty check");
  add_prime(c_unc); add_common(c_unc);
  c_unc->add_option("--trials", trials, "random sparse functions (default 100)");

  CLI::App* c_cls = app.add_subcommand("classify", "all A with sumset = R");
  add_prime(c_cls); add_common(c_cls); add_mode(c_cls);
  c_cls->add_option("--budget", budget, "search-node budget");

  CLI::App* c_ver = app.add_subcommand("verify", "range verification certificate");
  add_common(c_ver); add_mode(c_ver);
  c_ver->add_option("--p-min", p_min, "range start (default 3)");
  c_ver->add_option("--p-max", p_max, "range end (default 100)");
  c_ver->add_option("--budget", budget, "search-node budget");
  c_ver->add_option("--out", out_path, "certificate output path");
  c_ver->add_flag("--parallel", parallel, "one worker per prime");

  CLI::App* c_id = app.add_subcommand("identities", "full identity suite");
  add_common(c_id); add_mode(c_id);
  c_id->add_option("-p,--prime", p, "single prime");
  c_id->add_option("--p-min", p_min, "range start");
  c_id->add_option("--p-max", p_max, "range end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output o;
  ojson params;
  std::string command;
  std::mt19937_64 rng(seed);

  try {
    if (app.got_subcommand(c_res)) {
      command = "residues";
      params["p"] = p;
      PrimeField F(p);
      o.result["R"] = set_json(F.residues());
      o.result["N"] = set_json(F.nonresidues());
      o.line("R = " + set_str(F.residues()));
      o.line("N = " + set_str(F.nonresidues()));
    } else if (app.got_subcommand(c_leg)) {
      command = "legendre";
      params["p"] = p;
      params["x"] = x_arg;
      PrimeField F(p);
      o.result["chi"] = F.legendre(x_arg);
      o.line("chi(" + std::to_string(x_arg) + ") = " +
             std::to_string(F.legendre(x_arg)));
    } else if (app.got_subcommand(c_gauss)) {
      command = "gauss";
      params["p"] = p;
      PrimeField F(p);
      GaussSumValue g = gauss_sum(F);
      const double sp = std::sqrt(static_cast<double>(p));
      cplx expected = (p % 4 == 1) ? cplx{sp, 0.0} : cplx{0.0, sp};
      o.pass = std::abs(g.value - expected) <= 1e-6 * sp &&
               std::abs(std::norm(g.value) - static_cast<double>(p)) <= 1e-6 * p;
      o.result["value"] = cplx_json(g.value);
      o.result["class"] =
          g.tag == GaussClass::real_positive ? "sqrt(p)" : "i*sqrt(p)";
      o.result["norm_sq"] = std::norm(g.value);
      o.result["pass"] = o.pass;
      o.line("G(" + std::to_string(p) + ") = " + std::to_string(g.value.real()) +
             " + " + std::to_string(g.value.imag()) + "i  [" +
             std::string(o.pass ? "ok" : "FAIL") + "]");
    } else if (app.got_subcommand(c_jac)) {
      command = "jacobi";
      PrimeField F(p);
      if (c_jac->count("--j1") == 0) j1 = F.t();
      if (c_jac->count("--j2") == 0) j2 = F.t();
      params["p"] = p;
      params["j1"] = j1;
      params["j2"] = j2;
      MultChar a(F, j1), b(F, j2);
      cplx J = jacobi_sum(a, b);
      o.result["value"] = cplx_json(J);
      if (a.index() != 0 && b.index() == (p - 1 - a.index()) % (p - 1)) {
        cplx expected = -a(p - 1);
        o.pass = std::abs(J - expected) <= 1e-9 * p;
        o.result["expected"] = cplx_json(expected);
        o.result["pass"] = o.pass;
      }
      o.line("J = " + std::to_string(J.real()) + " + " +
             std::to_string(J.imag()) + "i");
    } else if (app.got_subcommand(c_weil)) {
      command = "weil";
      params["p"] = p;
      params["shifts"] = shifts;
      WeilReport r = weil_check(PrimeField(p), shifts);
      o.pass = r.pass;
      o.result["value"] = r.value;
      o.result["bound"] = r.bound;
      o.result["pass"] = r.pass;
      o.line("sum = " + std::to_string(r.value) + ", bound = " +
             std::to_string(r.bound) + "  [" + (r.pass ? "ok" : "FAIL") + "]");
    } else if (app.got_subcommand(c_sigma)) {
      command = "sigma";
      PrimeField F(p);
      if (c_sigma->count("--index") == 0) j1 = F.t();
      params["p"] = p;
      params["set_a"] = set_a;
      params["set_b"] = set_b;
      params["index"] = j1;
      SigmaReport r = sigma_sum(FSet(p, set_a), FSet(p, set_b), MultChar(F, j1));
      o.pass = r.de_ok && r.rho_ok;
      o.result["value"] = cplx_json(r.value);
      o.result["de_bound"] = r.de_bound;
      o.result["rho_bound"] = r.rho_bound;
      o.result["de_ok"] = r.de_ok;
      o.result["rho_ok"] = r.rho_ok;
      o.line("sigma = " + std::to_string(std::abs(r.value)) + "  [" +
             (o.pass ? "ok" : "FAIL") + "]");
    } else if (app.got_subcommand(c_energy)) {
      command = "energy";
      params["mod"] = modn;
      params["set"] = set_a;
      params["k"] = k_arg;
      i64 e = energy_k(FSet(modn, set_a), k_arg);
      o.result["energy"] = e;
      o.line("E_" + std::to_string(k_arg) + " = " + std::to_string(e));
    } else if (app.got_subcommand(c_pds)) {
      command = "pds";
      params["mod"] = modn;
      params["set"] = set_a;
      PDSReport r = pds_lambda(FSet(modn, set_a));
      o.result["is_pds"] = r.is_pds;
      o.result["lambda"] = r.lambda;
      o.line(r.is_pds ? "perfect difference set, lambda = " +
                            std::to_string(r.lambda)
                      : "not a perfect difference set");
    } else if (app.got_subcommand(c_mult)) {
      command = "multipliers";
      params["mod"] = modn;
      params["set"] = set_a;
      FSet M = multipliers(FSet(modn, set_a));
      o.result["multipliers"] = set_json(M);
      o.line("multipliers = " + set_str(M));
    } else if (app.got_subcommand(c_singer)) {
      command = "singer";
      params["q"] = q;
      FSet A = singer(q);
      PDSReport r = pds_lambda(A);
      auto s = fixed_translate(A, q % A.modulus);
      o.pass = r.is_pds && r.lambda == 1 && A.size() == q + 1 && s.has_value();
      o.result["P"] = A.modulus;
      o.result["set"] = set_json(A);
      o.result["lambda"] = r.lambda;
      if (s) o.result["fixed_translate"] = *s;
      else o.result["fixed_translate"] = nullptr;
      o.result["pass"] = o.pass;
      o.line("singer(" + std::to_string(q) + ") = " + set_str(A) + " mod " +
             std::to_string(A.modulus) + "  [" + (o.pass ? "ok" : "FAIL") + "]");
    } else if (app.got_subcommand(c_sum)) {
      command = "sumset";
      params["mod"] = modn;
      params["set_a"] = set_a;
      params["mode"] = mode;
      FSet A(modn, set_a);
      FSet S;
      if (mode == "restricted") {
        if (c_sum->count("--set-b"))
          throw std::invalid_argument("sumset: --set-b needs standard mode");
        S = restricted_sumset(A);
      } else {
        FSet B = c_sum->count("--set-b") ? FSet(modn, set_b) : A;
        if (c_sum->count("--set-b")) params["set_b"] = set_b;
        S = sumset(A, B);
      }
      o.result["sumset"] = set_json(S);
      o.line("sumset = " + set_str(S));
    } else if (app.got_subcommand(c_diag)) {
      command = "diagnostics";
      params["p"] = p;
      params["set"] = set_a;
      SumsetDiagnostics d = diagnostics(PrimeField(p), FSet(p, set_a));
      o.result["a"] = d.a;
      o.result["n"] = d.n;
      o.result["delta"] = d.delta;
      o.result["omega"] = d.omega;
      o.result["d"] = d.d;
      o.result["eta"] = d.eta.str();
      o.result["z"] = d.z;
      o.result["zeta1"] = d.zeta1.str();
      o.result["zeta2"] = d.zeta2.str();
      o.result["energy"] = d.energy;
      o.result["e1"] = d.e1;
      o.result["e2_l1"] = d.e2_l1;
      o.result["e2_l2sq"] = d.e2_l2sq;
      o.line("a=" + std::to_string(d.a) + " n=" + std::to_string(d.n) +
             " delta=" + std::to_string(d.delta) + " z=" + std::to_string(d.z) +
             " zeta1=" + d.zeta1.str() + " zeta2=" + d.zeta2.str() +
             " E=" + std::to_string(d.energy));
    } else if (app.got_subcommand(c_clique)) {
      command = "clique";
      params["p"] = p;
      CliqueResult r = paley_clique(PrimeField(p));
      o.pass = r.lev_bound_ok;
      o.result["max_size"] = r.max_size;
      o.result["witness"] = set_json(r.witness);
      o.result["bound_ok"] = r.lev_bound_ok;
      o.line("clique number = " + std::to_string(r.max_size) + ", witness " +
             set_str(r.witness) + "  [" + (o.pass ? "ok" : "FAIL") + "]");
    } else if (app.got_subcommand(c_tilde)) {
      command = "tilde-check";
      params["p"] = p;
      params["seed"] = seed;
      PrimeField F(p);
      ChiSystem sys(F);
      u64 lam = 1 + rng() % (p - 1), mu = 1 + rng() % (p - 1), s = rng() % p;
      TildeSuiteReport r = tilde_identity_suite(F, random_cfn(p, rng),
                                                random_cfn(p, rng), lam, mu, s,
                                                sys);
      o.pass = r.all_ok();
      o.result["lam"] = lam;
      o.result["mu"] = mu;
      o.result["s"] = s;
      o.result["shift"] = r.shift_ok;
      o.result["involution"] = r.involution_ok;
      o.result["dilation"] = r.dilation_ok;
      o.result["inversion"] = r.inversion_ok;
      o.result["parseval"] = r.parseval_ok;
      o.result["circ_star"] = r.circ_star_ok;
      o.result["conv_dilated"] = r.conv_dilated_ok;
      o.result["conv"] = r.conv_ok;
      o.result["star"] = r.star_ok;
      o.result["max_err"] = r.max_err;
      o.line(std::string("tilde suite ") + (o.pass ? "ok" : "FAIL") +
             " (max_err = " + std::to_string(r.max_err) + ", lam=" +
             std::to_string(lam) + " mu=" + std::to_string(mu) + " s=" +
             std::to_string(s) + ")");
    } else if (app.got_subcommand(c_efun)) {
      command = "efun";
      params["p"] = p;
      params["set"] = set_a;
      EFunction e = e_function(PrimeField(p), FSet(p, set_a));
      o.pass = e.mean_zero && e.norm_ok && e.cocycle_ok && e.level_bound_ok &&
               (!e.singer_repr_ok || *e.singer_repr_ok);
      o.result["values"] = e.values.values;
      ojson hist = ojson::object();
      for (const auto& [c, cnt] : e.level_histogram)
        hist[std::to_string(c)] = cnt;
      o.result["level_histogram"] = hist;
      o.result["mean_zero"] = e.mean_zero;
      o.result["norm_ok"] = e.norm_ok;
      o.result["cocycle_ok"] = e.cocycle_ok;
      o.result["level_bound_ok"] = e.level_bound_ok;
      if (e.singer_repr_ok) o.result["singer_repr_ok"] = *e.singer_repr_ok;
      i64 lo = e.values.values[0], hi = lo;
      for (i64 v : e.values.values) { lo = std::min(lo, v); hi = std::max(hi, v); }
      o.result["min"] = lo;
      o.result["max"] = hi;
      o.line(std::string("E_A checks ") + (o.pass ? "ok" : "FAIL") +
             " (min=" + std::to_string(lo) + ", max=" + std::to_string(hi) + ")");
    } else if (app.got_subcommand(c_unc)) {
      command = "uncertainty";
      params["p"] = p;
      params["seed"] = seed;
      params["trials"] = trials;
      PrimeField F(p);
      ChiSystem sys(F);
      std::normal_distribution<double> dist;
      i64 min_product = -1;
      o.pass = true;
      for (u64 rep = 0; rep < trials; ++rep) {
        CFunction g(p);
        u64 nnz = 1 + rng() % 10;
        for (u64 i = 0; i < nnz; ++i) g.values[rng() % p] = {dist(rng), dist(rng)};
        if (g.linf() == 0.0) continue;
        UncertaintyReport r = uncertainty_product(g, sys);
        if (!r.pass) o.pass = false;
        i64 prod = r.supp_g * r.supp_tilde;
        if (min_product < 0 || prod < min_product) min_product = prod;
      }
      const double u = 1.0 + 1.0 / std::sqrt(static_cast<double>(p));
      o.result["trials"] = trials;
      o.result["min_product"] = min_product;
      o.result["lower_bound"] = static_cast<double>(p) / (u * u);
      o.result["pass"] = o.pass;
      o.line("min |supp g| |supp g~| = " + std::to_string(min_product) +
             "  [" + (o.pass ? "ok" : "FAIL") + "]");
    } else if (app.got_subcommand(c_cls)) {
      command = "classify";
      params["p"] = p;
      params["mode"] = mode;
      params["budget"] = budget;
      SumMode m = mode == "standard" ? SumMode::standard : SumMode::restricted;
      ClassifyResult r = classify(PrimeField(p), m, budget);
      o.result["solutions"] = ojson::array();
      for (const FSet& A : r.solutions) o.result["solutions"].push_back(A.members);
      o.result["nodes"] = r.nodes;
      if (r.solutions.empty()) {
        o.line("no solutions");
      } else {
        for (const FSet& A : r.solutions) o.line(set_str(A));
      }
    } else if (app.got_subcommand(c_ver)) {
      command = "verify";
      params["p_min"] = p_min;
      params["p_max"] = p_max;
      params["mode"] = mode;
      params["budget"] = budget;
      SearchConfig cfg;
      cfg.mode = mode == "standard" ? SumMode::standard : SumMode::restricted;
      cfg.p_min = p_min;
      cfg.p_max = p_max;
      cfg.max_nodes = budget;
      cfg.parallel = parallel;
      Certificate cert = verify_range(cfg);
      ojson cj = certificate_to_json(cert);
      o.pass = cert.theorem_holds && cert.invariants_ok;
      o.result = cj;
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("verify: cannot open " + out_path);
        out << cj.dump(2) << "\n";
      }
      for (const PrimeResult& r : cert.per_prime)
        if (!r.solutions.empty()) {
          std::string line = "p=" + std::to_string(r.p) + ":";
          for (const FSet& A : r.solutions) line += " " + set_str(A);
          o.line(line);
        }
      o.line(std::string("theorem ") + (cert.theorem_holds ? "holds" : "FAILS") +
             ", invariants " + (cert.invariants_ok ? "ok" : "FAIL"));
    } else if (app.got_subcommand(c_id)) {
      command = "identities";
      if (c_id->count("-p")) { p_min = p; p_max = p; }
      params["p_min"] = p_min;
      params["p_max"] = p_max;
      params["seed"] = seed;
      o.result["per_prime"] = ojson::object();
      for (u64 pp = p_min; pp <= p_max; ++pp) {
        if (!is_prime(pp) || pp < 3) continue;
        auto [flags, failed] = identity_pass(pp, rng);
        o.result["per_prime"][std::to_string(pp)] = flags;
        std::string line = "p=" + std::to_string(pp) + ": ";
        if (failed.empty()) {
          line += "all ok";
        } else {
          line += "FAIL at " + failed + " (seed=" + std::to_string(seed) + ")";
          o.pass = false;
        }
        o.line(line);
      }
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (json) {
    ojson env;
    env["schema"] = "resform-cli/1";
    env["command"] = command;
    env["params"] = params;
    env["result"] = o.result;
    std::cout << env.dump(2) << "\n";
  } else {
    for (const std::string& l : o.lines) std::cout << l << "\n";
  }
  return o.pass ? 0 : 1;
}
