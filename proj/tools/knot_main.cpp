#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>

#include "khdetect/census.hpp"
#include "khdetect/diagram.hpp"
#include "khdetect/dt_code.hpp"
#include "khdetect/errors.hpp"
#include "khdetect/jones.hpp"
#include "khdetect/khovanov.hpp"

namespace {

using namespace khdetect;

int kh_crossing_cap() {
  if (const char* env = std::getenv("KNOT_MAX_CROSSINGS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return kKhDefaultMaxCrossings;
}

std::string numeric_form(const DTCode& d) {
  std::string s;
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d.entries[i]);
  }
  return s;
}

void cmd_parse(const std::string& code) {
  DTCode d = parse_dt_any(code);
  Diagram dg = Diagram::realize(d);
  std::cout << "dt: " << numeric_form(d) << "\n";
  if (d.crossings() <= 26)
    std::cout << "compressed: " << encode_dt_compressed(d) << "\n";
  std::cout << "gauss: " << gauss_to_string(dt_to_gauss(d)) << "\n";
  std::cout << "pd: " << dg.pd() << "\n";
  WritheInfo wi = dg.writhe();
  std::cout << "crossings: " << d.crossings() << "\n";
  std::cout << "writhe: " << wi.w << " (n+=" << wi.n_plus
            << ", n-=" << wi.n_minus << ")\n";
}

void cmd_jones(const std::string& code, bool unreduced,
               const std::string& format) {
  Diagram dg = Diagram::realize(parse_dt_any(code));
  LaurentPoly p = unreduced ? jones_unreduced(dg) : jones_reduced(dg);
  std::cout << (format == "canonical" ? p.canonical() : p.pretty()) << "\n";
}

void print_grid(const BigradedPoly& kh, const LaurentPoly& chi) {
  if (kh.is_zero()) {
    std::cout << "(empty)\n";
    return;
  }
  int qmin = 0, qmax = 0, tmin = 0, tmax = 0;
  bool first = true;
  for (const auto& [key, c] : kh.terms()) {
    auto [t, q] = key;
    if (first) {
      qmin = qmax = q;
      tmin = tmax = t;
      first = false;
    }
    qmin = std::min(qmin, q);
    qmax = std::max(qmax, q);
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  int qstep = 2;
  for (const auto& [key, c] : kh.terms())
    if ((key.second - qmin) % 2 != 0) qstep = 1;
  std::cout << "q\\t";
  for (int t = tmin; t <= tmax; ++t) std::cout << '\t' << t;
  std::cout << "\tchi\n";
  for (int q = qmin; q <= qmax; q += qstep) {
    std::cout << q;
    for (int t = tmin; t <= tmax; ++t) {
      std::cout << '\t';
      Int c = kh.coeff(q, t);
      if (c != 0) std::cout << c;
    }
    Int x = chi.coeff(q);
    std::cout << '\t';
    if (x != 0) std::cout << x;
    std::cout << "\n";
  }
}

void cmd_kh(const std::string& code, const std::string& coeffs,
            const std::string& format) {
  Diagram dg = Diagram::realize(parse_dt_any(code));
  KhOptions opts;
  opts.coeffs = coeffs == "f2" ? CoeffField::GF2 : CoeffField::Rationals;
  opts.max_crossings = kh_crossing_cap();
  BigradedPoly kh = kh_polynomial(dg, opts);
  if (format == "canonical")
    std::cout << kh.canonical() << "\n";
  else
    print_grid(kh, kh.eval_t_minus1());
}

void cmd_scan(const std::string& census_path, const std::string& targets,
              int max_cr, bool with_kh, int twist_min, int twist_max) {
  auto records = load_census(census_path);
  ComputeOptions copts;
  copts.which = WhichInvariants::Jones;
  auto inv = compute_invariants(records, copts);
  std::vector<ScanTarget> tgts;
  if (targets == "torus") {
    tgts = torus_targets(max_cr);
  } else if (targets == "twist") {
    int lo = twist_min > 0 ? twist_min : 1;
    int hi = twist_max > 0 ? twist_max : std::max(lo, max_cr - 2);
    tgts = twist_targets(lo, hi);
  } else {
    throw InvalidParameters("--targets must be torus or twist");
  }
  ScanOptions sopts;
  sopts.with_kh = with_kh;
  sopts.kh_max_crossings = kh_crossing_cap();
  auto reports = scan_targets(inv, tgts, sopts);
  for (const auto& rep : reports) {
    for (const auto& m : rep.matches) {
      std::cout << rep.target_name << '\t' << m.record_name << '\t'
                << "jones=match\tkh=";
      if (!m.kh_equal_up_to_mirror.has_value())
        std::cout << '-';
      else
        std::cout << (*m.kh_equal_up_to_mirror ? "equal" : "differs");
      std::cout << "\tsame-knot-hint=" << (m.is_same_knot_hint ? "yes" : "no")
                << "\n";
    }
  }
}

void cmd_stats(const std::string& db_path, const std::string& invariant,
               int max_cr, const std::string& format) {
  auto inv = load_invariants(db_path);
  StatsInvariant which =
      invariant == "kh" ? StatsInvariant::Kh : StatsInvariant::Jones;
  auto rows = stats(inv, which, max_cr);
  if (format == "csv") {
    std::cout << "Cr,Unique,Almost,Total,Knots,FracU,FracT,FracK\n";
    for (const auto& r : rows)
      std::cout << r.cr << ',' << r.unique << ',' << r.almost << ','
                << r.total << ',' << r.knots << ',' << r.frac_u << ','
                << r.frac_t << ',' << r.frac_k << "\n";
  } else {
    std::cout << "Cr\tUnique\tAlmost\tTotal\tKnots\tFracU\tFracT\tFracK\n";
    for (const auto& r : rows)
      std::cout << r.cr << '\t' << r.unique << '\t' << r.almost << '\t'
                << r.total << '\t' << r.knots << '\t' << r.frac_u << '\t'
                << r.frac_t << '\t' << r.frac_k << "\n";
  }
}

void cmd_invariants(const std::string& census_path, const std::string& out,
                    bool with_kh, const std::string& existing) {
  auto records = load_census(census_path);
  std::vector<InvariantRecord> cache;
  if (!existing.empty()) cache = load_invariants(existing);
  ComputeOptions opts;
  opts.which = with_kh ? WhichInvariants::JonesAndKh : WhichInvariants::Jones;
  opts.kh_max_crossings = kh_crossing_cap();
  persist_invariants(compute_invariants(records, opts, cache), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot invariant engine: DT codes, Jones and Khovanov "
               "polynomials, census scans"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --threads appear after the subcommand

  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = auto)");

  std::string dt_code, format, coeffs = "q", census, targets, db, out_path,
                                existing, invariant;
  bool unreduced = false, with_kh = false;
  int max_cr = 19, twist_min = 0, twist_max = 0;

  auto* parse = app.add_subcommand("parse", "validate and echo a DT code");
  parse->add_option("--dt", dt_code, "DT code (compressed or numeric)")
      ->required();

  auto* jones = app.add_subcommand("jones", "Jones polynomial of a DT code");
  jones->add_option("--dt", dt_code)->required();
  jones->add_flag("--unreduced", unreduced);
  jones->add_option("--format", format)
      ->check(CLI::IsMember({"pretty", "canonical"}))
      ->default_val("pretty");

  auto* kh = app.add_subcommand("kh", "Khovanov polynomial of a DT code");
  kh->add_option("--dt", dt_code)->required();
  kh->add_option("--coeffs", coeffs)
      ->check(CLI::IsMember({"q", "f2"}))
      ->default_val("q");
  kh->add_option("--format", format)
      ->check(CLI::IsMember({"grid", "canonical"}))
      ->default_val("grid");

  auto* scan = app.add_subcommand(
      "scan", "match census Jones polynomials against torus/twist targets");
  scan->add_option("--census", census)->required();
  scan->add_option("--targets", targets)
      ->check(CLI::IsMember({"torus", "twist"}))
      ->required();
  scan->add_option("--max-cr", max_cr)->default_val(19);
  scan->add_flag("--kh", with_kh, "discriminate matches by Khovanov tables");
  scan->add_option("--twist-min", twist_min);
  scan->add_option("--twist-max", twist_max);

  auto* st = app.add_subcommand("stats", "polynomial statistics from a DB");
  st->add_option("--db", db)->required();
  st->add_option("--invariant", invariant)
      ->check(CLI::IsMember({"jones", "kh"}))
      ->required();
  st->add_option("--max-cr", max_cr)->default_val(19);
  std::string st_format = "pretty";
  st->add_option("--format", st_format)
      ->check(CLI::IsMember({"csv", "pretty"}))
      ->default_val("pretty");

  auto* invc = app.add_subcommand(
      "invariants", "compute invariants for a census and write a DB");
  invc->add_option("--census", census)->required();
  invc->add_option("--out", out_path)->required();
  invc->add_flag("--kh", with_kh);
  invc->add_option("--db", existing, "existing DB reused as a cache");

  CLI11_PARSE(app, argc, argv);

  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (parse->parsed()) {
      cmd_parse(dt_code);
    } else if (jones->parsed()) {
      cmd_jones(dt_code, unreduced, format);
    } else if (kh->parsed()) {
      cmd_kh(dt_code, coeffs, format);
    } else if (scan->parsed()) {
      cmd_scan(census, targets, max_cr, with_kh, twist_min, twist_max);
    } else if (st->parsed()) {
      cmd_stats(db, invariant, max_cr, st_format);
    } else if (invc->parsed()) {
      cmd_invariants(census, out_path, with_kh, existing);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
