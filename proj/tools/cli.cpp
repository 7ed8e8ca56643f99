#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "padic/axioms.hpp"
#include "padic/divrel.hpp"
#include "padic/funcring.hpp"
#include "padic/hensel.hpp"
#include "padic/padic.hpp"
#include "padic/sampler.hpp"

namespace padic::cli {

namespace {

constexpr std::int64_t kDefaultTrials = 10000;

void require_prime_flag(std::int64_t p, const char* flag) {
  if (!is_prime(p)) {
    throw ParseError(std::string(flag) + "=" + std::to_string(p) + " is not prime");
  }
}

/// A value argument: a rational literal, or a p-adic literal when it starts
/// with "p^", "0" being read as the exact rational zero.
PAdic parse_value(const std::string& text, std::int64_t p, std::int64_t prec) {
  if (text.rfind("p^", 0) == 0 || text.rfind("O(", 0) == 0) return parse_padic(text, p);
  return embed_rational(parse_rational(text), p, prec);
}

LCFunction load_function(const std::string& path, std::int64_t p) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open function file '" + path + "'");
  LCFunction f = read_function(in);
  if (f.prime() != p) {
    throw ParseError("function file '" + path + "' is over p=" + std::to_string(f.prime()) +
                     ", not p=" + std::to_string(p));
  }
  return f;
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t flag_value) {
  if (seed_opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("PADIC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("PADIC_SEED is not a 64-bit integer: '" + std::string(env) + "'");
    }
  }
  return flag_value;
}

struct PropertyFlags {
  std::int64_t p = 3;
  std::int64_t prec = PAdic::kDefaultPrecision;
  std::int64_t trials = kDefaultTrials;
  std::uint64_t seed = 0;
  std::string space_spec;
  std::string relation;
};

std::optional<CompactSpace> parse_space_flag(const std::string& spec, std::int64_t p) {
  if (spec.empty()) return std::nullopt;
  return CompactSpace::parse(spec, p);
}

std::string active_command(const CLI::App& app) {
  const auto subs = app.get_subcommands();
  return subs.empty() ? "cli" : subs.front()->get_name();
}

int report_exit_code(const CheckReport& report) {
  // Exit reflects axiom failures; totality/cancellation are reported
  // properties and legitimately fail for function-ring relations.
  for (const auto& l : report.lines) {
    if (l.id != "totality" && l.id != "cancellation" && !l.ok()) return 1;
  }
  return 0;
}

int cmd_axioms_check(const PropertyFlags& fl, std::ostream& out) {
  CheckReport report;
  if (fl.relation == "canonical-qp") {
    const QpRing ring{fl.p, fl.prec};
    QpSampler sampler(fl.p, fl.prec, fl.seed);
    const auto rel = canonical_qp(fl.p);
    report = check_axioms(ring, rel, sampler, fl.trials);
    report.lines.push_back(check_total(ring, rel, sampler, fl.trials));
    report.lines.push_back(check_cancellation(ring, rel, sampler, fl.trials));
  } else if (fl.relation == "canonical-star") {
    const auto space = parse_space_flag(fl.space_spec, fl.p);
    if (!space) throw ParseError("canonical-star needs --space finite:<n> or zp:<k>");
    const FnRing ring{*space, fl.p, fl.prec};
    FnSampler sampler(*space, fl.p, fl.prec, fl.seed);
    const auto rel = canonical_star(*space, fl.p);
    report = check_axioms(ring, rel, sampler, fl.trials);
    report.lines.push_back(check_total(ring, rel, sampler, fl.trials));
    report.lines.push_back(check_cancellation(ring, rel, sampler, fl.trials));
  } else if (fl.relation == "canonical-q") {
    const QRing ring{fl.p, fl.prec};
    QSampler sampler(fl.p, fl.seed);
    const auto rel = canonical_q(fl.p, fl.prec);
    report = check_axioms(ring, rel, sampler, fl.trials);
    report.lines.push_back(check_total(ring, rel, sampler, fl.trials));
    report.lines.push_back(check_cancellation(ring, rel, sampler, fl.trials));
  } else {
    throw ParseError("unknown relation '" + fl.relation +
                     "' (expected canonical-qp, canonical-star or canonical-q)");
  }
  out << format_report("axiom", report);
  return report_exit_code(report);
}

int cmd_seminorm_check(const PropertyFlags& fl, std::ostream& out) {
  CheckReport report;
  if (fl.relation == "canonical-qp") {
    const QpRing ring{fl.p, fl.prec};
    QpSampler sampler(fl.p, fl.prec, fl.seed);
    report = check_seminorm_laws(ring, canonical_qp(fl.p), sampler, fl.trials);
  } else if (fl.relation == "canonical-star") {
    const auto space = parse_space_flag(fl.space_spec, fl.p);
    if (!space) throw ParseError("canonical-star needs --space finite:<n> or zp:<k>");
    const FnRing ring{*space, fl.p, fl.prec};
    FnSampler sampler(*space, fl.p, fl.prec, fl.seed);
    report = check_seminorm_laws(ring, canonical_star(*space, fl.p), sampler, fl.trials);
  } else if (fl.relation == "canonical-q") {
    const QRing ring{fl.p, fl.prec};
    QSampler sampler(fl.p, fl.seed);
    report = check_seminorm_laws(ring, canonical_q(fl.p, fl.prec), sampler, fl.trials);
  } else {
    throw ParseError("unknown relation '" + fl.relation + "'");
  }
  out << format_report("law", report);
  return report.all_passed() ? 0 : 1;
}

int cmd_local_global(const PropertyFlags& fl, std::ostream& out) {
  const auto space = parse_space_flag(fl.space_spec, fl.p);
  if (!space) throw ParseError("local-global needs --space finite:<n> or zp:<k>");
  FnSampler sampler(*space, fl.p, fl.prec, fl.seed);
  std::int64_t agree = 0, disagree = 0, undecided = 0;
  for (std::int64_t t = 0; t < fl.trials; ++t) {
    switch (local_global_check(sampler.draw())) {
      case Ternary::True:
        ++agree;
        break;
      case Ternary::False:
        ++disagree;
        break;
      default:
        ++undecided;
        break;
    }
  }
  out << "trials=" << fl.trials << " agree=" << agree << " disagree=" << disagree
      << " undecided=" << undecided << '\n';
  return disagree == 0 ? 0 : 1;
}

std::vector<Rational> parse_coeff_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(piece));
    } catch (const ParseError& e) {
      throw ParseError("--coeffs entry " + std::to_string(out.size()) + ": " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_refutation(const Refutation& r) {
  std::ostringstream os;
  os << "refutation point=" << r.point << " vg=";
  if (!r.val_g_exact) os << ">=";
  os << r.val_g.str() << " vf=" << r.val_f << " vsum=" << r.val_sum << " q=" << r.q
     << " vsum_mod_q=" << ((r.val_sum % r.q) + r.q) % r.q;
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact bounded-precision p-adic arithmetic and divisibility toolkit"};
  app.require_subcommand(1);

  // vp
  std::int64_t vp_p = 3;
  std::string vp_value;
  auto* vp_cmd = app.add_subcommand("vp", "p-adic valuation of an exact rational");
  vp_cmd->add_option("--p", vp_p, "prime")->required();
  vp_cmd->add_option("value", vp_value, "rational literal")->required();

  // embed
  std::int64_t em_p = 3, em_prec = PAdic::kDefaultPrecision;
  std::string em_value;
  auto* em_cmd = app.add_subcommand("embed", "base-p expansion of an exact rational");
  em_cmd->add_option("--p", em_p, "prime")->required();
  em_cmd->add_option("--N", em_prec, "relative precision (digits)");
  em_cmd->add_option("value", em_value, "rational literal")->required();

  // gamma
  std::int64_t ga_p = 3, ga_prec = PAdic::kDefaultPrecision;
  std::string ga_value;
  auto* ga_cmd = app.add_subcommand("gamma", "Kochen operator value");
  ga_cmd->add_option("--p", ga_p, "prime")->required();
  ga_cmd->add_option("--N", ga_prec, "relative precision (digits)");
  ga_cmd->add_option("value", ga_value, "rational or p-adic literal")->required();

  // norm
  std::int64_t no_p = 3, no_prec = PAdic::kDefaultPrecision;
  std::string no_value;
  auto* no_cmd = app.add_subcommand("norm", "p-adic absolute value");
  no_cmd->add_option("--p", no_p, "prime")->required();
  no_cmd->add_option("--N", no_prec, "relative precision (digits)");
  no_cmd->add_option("value", no_value, "rational or p-adic literal")->required();

  // divides
  std::int64_t dv_p = 3, dv_q = 2;
  std::string dv_g, dv_f, dv_out;
  auto* dv_cmd = app.add_subcommand("divides", "decide g |* f via the q-th root criterion");
  dv_cmd->add_option("--p", dv_p, "prime")->required();
  dv_cmd->add_option("--q", dv_q, "root exponent, prime != p")->required();
  dv_cmd->add_option("--out", dv_out, "write the witness h to this file");
  dv_cmd->add_option("g", dv_g, "divisor function file")->required();
  dv_cmd->add_option("f", dv_f, "dividend function file")->required();

  // hensel-root
  std::int64_t hr_p = 3, hr_q = 2, hr_prec = PAdic::kDefaultPrecision;
  std::string hr_value;
  auto* hr_cmd = app.add_subcommand("hensel-root", "q-th root of a 1-unit");
  hr_cmd->add_option("--p", hr_p, "prime")->required();
  hr_cmd->add_option("--q", hr_q, "root exponent, prime != p")->required();
  hr_cmd->add_option("--N", hr_prec, "relative precision (digits)");
  hr_cmd->add_option("target", hr_value, "rational or p-adic literal")->required();

  // property-check commands
  PropertyFlags ax, sn, lg;
  auto* ax_cmd = app.add_subcommand("axioms-check", "divisibility axiom suite");
  ax_cmd->add_option("--p", ax.p, "prime")->required();
  ax_cmd->add_option("--N", ax.prec, "relative precision (digits)");
  ax_cmd->add_option("--trials", ax.trials, "instances per axiom");
  auto* ax_seed = ax_cmd->add_option("--seed", ax.seed, "sampler seed");
  ax_cmd->add_option("--space", ax.space_spec, "finite:<n> or zp:<k> (canonical-star)");
  ax_cmd->add_option("relation", ax.relation, "canonical-qp | canonical-star | canonical-q")
      ->required();

  auto* sn_cmd = app.add_subcommand("seminorm-check", "semi-norm law suite");
  sn_cmd->add_option("--p", sn.p, "prime")->required();
  sn_cmd->add_option("--N", sn.prec, "relative precision (digits)");
  sn_cmd->add_option("--trials", sn.trials, "instances per law");
  auto* sn_seed = sn_cmd->add_option("--seed", sn.seed, "sampler seed");
  sn_cmd->add_option("--space", sn.space_spec, "finite:<n> or zp:<k> (canonical-star)");
  sn_cmd->add_option("relation", sn.relation, "canonical-qp | canonical-star | canonical-q")
      ->required();

  auto* lg_cmd = app.add_subcommand("local-global", "pointwise vs whole-function divisibility");
  lg_cmd->add_option("--p", lg.p, "prime")->required();
  lg_cmd->add_option("--N", lg.prec, "relative precision (digits)");
  lg_cmd->add_option("--trials", lg.trials, "functions to sample");
  auto* lg_seed = lg_cmd->add_option("--seed", lg.seed, "sampler seed");
  lg_cmd->add_option("--space", lg.space_spec, "finite:<n> or zp:<k>")->required();

  // approx
  std::int64_t apx_p = 3, apx_k = 1, apx_prec = PAdic::kDefaultPrecision;
  std::string apx_coeffs, apx_out;
  auto* apx_cmd = app.add_subcommand("approx", "level-k sample of an integral polynomial on Z_p");
  apx_cmd->add_option("--p", apx_p, "prime")->required();
  apx_cmd->add_option("--k", apx_k, "level")->required();
  apx_cmd->add_option("--N", apx_prec, "relative precision (digits)");
  apx_cmd->add_option("--coeffs", apx_coeffs, "c0,c1,... rational coefficients")->required();
  apx_cmd->add_option("--out", apx_out, "write the function file here");

  // spectrum
  std::int64_t sp_p = 3;
  std::string sp_space;
  auto* sp_cmd = app.add_subcommand("spectrum", "evaluation points of a space");
  sp_cmd->add_option("--p", sp_p, "prime (needed for zp:<k>)");
  sp_cmd->add_option("--space", sp_space, "finite:<n> or zp:<k>")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (vp_cmd->parsed()) {
      require_prime_flag(vp_p, "--p");
      out << vp_rational(parse_rational(vp_value), vp_p).str() << '\n';
      return 0;
    }
    if (em_cmd->parsed()) {
      require_prime_flag(em_p, "--p");
      if (em_prec < 1) throw ParseError("--N must be >= 1");
      out << format_padic(embed_rational(parse_rational(em_value), em_p, em_prec)) << '\n';
      return 0;
    }
    if (ga_cmd->parsed()) {
      require_prime_flag(ga_p, "--p");
      if (ga_prec < 1) throw ParseError("--N must be >= 1");
      out << format_padic(kochen_gamma(parse_value(ga_value, ga_p, ga_prec))) << '\n';
      return 0;
    }
    if (no_cmd->parsed()) {
      require_prime_flag(no_p, "--p");
      out << format_rational(norm_abs(parse_value(no_value, no_p, no_prec))) << '\n';
      return 0;
    }
    if (dv_cmd->parsed()) {
      require_prime_flag(dv_p, "--p");
      require_prime_flag(dv_q, "--q");
      const LCFunction g = load_function(dv_g, dv_p);
      const LCFunction f = load_function(dv_f, dv_p);
      const auto result = divides_by_root_criterion(g, f, dv_q);
      switch (result.decision) {
        case Ternary::True:
          out << "result=divides\n";
          if (!dv_out.empty()) {
            std::ofstream o(dv_out);
            if (!o) throw Error("cannot write witness file '" + dv_out + "'");
            write_function(o, *result.witness);
          } else {
            write_function(out, *result.witness);
          }
          return 0;
        case Ternary::False:
          out << "result=refuted\n" << format_refutation(*result.refutation) << '\n';
          return 1;
        default:
          out << "result=undecided\n";
          return 2;
      }
    }
    if (hr_cmd->parsed()) {
      require_prime_flag(hr_p, "--p");
      require_prime_flag(hr_q, "--q");
      if (hr_prec < 1) throw ParseError("--N must be >= 1");
      const PAdic target = parse_value(hr_value, hr_p, hr_prec);
      out << format_padic(qth_root_of_unit(RootSpec{hr_q, target, hr_prec})) << '\n';
      return 0;
    }
    if (ax_cmd->parsed()) {
      require_prime_flag(ax.p, "--p");
      if (ax.prec < 1) throw ParseError("--N must be >= 1");
      ax.seed = resolve_seed(ax_seed, ax.seed);
      return cmd_axioms_check(ax, out);
    }
    if (sn_cmd->parsed()) {
      require_prime_flag(sn.p, "--p");
      if (sn.prec < 1) throw ParseError("--N must be >= 1");
      sn.seed = resolve_seed(sn_seed, sn.seed);
      return cmd_seminorm_check(sn, out);
    }
    if (lg_cmd->parsed()) {
      require_prime_flag(lg.p, "--p");
      if (lg.prec < 1) throw ParseError("--N must be >= 1");
      lg.seed = resolve_seed(lg_seed, lg.seed);
      return cmd_local_global(lg, out);
    }
    if (apx_cmd->parsed()) {
      require_prime_flag(apx_p, "--p");
      if (apx_k < 0) throw ParseError("--k must be >= 0");
      if (apx_prec < 1) throw ParseError("--N must be >= 1");
      const Polynomial poly{parse_coeff_list(apx_coeffs)};
      const auto approx = approx_by_level(poly, apx_p, apx_k, apx_prec);
      if (!apx_out.empty()) {
        std::ofstream o(apx_out);
        if (!o) throw Error("cannot write function file '" + apx_out + "'");
        write_function(o, approx.fn);
      } else {
        write_function(out, approx.fn);
      }
      if (approx.error_valuation.is_infinite()) {
        out << "error_bound=0\n";
      } else {
        out << "error_bound=p^-" << approx.error_valuation.value() << '\n';
      }
      return 0;
    }
    if (sp_cmd->parsed()) {
      const CompactSpace space = CompactSpace::parse(sp_space, sp_p);
      const auto pts = spectrum_points(space);
      out << "points=" << pts.size() << '\n';
      for (const auto& pt : pts) out << pt.index << '\n';
      return 0;
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const InsufficientPrecision& e) {
    err << "error[" << active_command(app) << "]: insufficient precision: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error[" << active_command(app) << "]: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace padic::cli
