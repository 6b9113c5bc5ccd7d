#include "khdetect/census.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "khdetect/errors.hpp"

namespace khdetect {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CensusRecord> parse_census(const std::string& text) {
  std::vector<CensusRecord> out;
  std::set<std::string> names;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip(line);
    if (body.empty() || body[0] == '#') continue;
    std::istringstream ls(body);
    std::string name, code, extra;
    ls >> name >> code;
    if (code.empty())
      throw FormatError("census line needs '<name> <dt-code>'", line_no);
    if (ls >> extra)
      throw FormatError("unexpected trailing field '" + extra + "'", line_no);
    if (!names.insert(name).second)
      throw FormatError("duplicate census name '" + name + "'", line_no);
    CensusRecord rec;
    rec.name = name;
    try {
      rec.dt = parse_dt_any(code);
    } catch (const InputError& e) {
      throw FormatError(std::string(e.what()), line_no);
    }
    rec.crossings = rec.dt.crossings();
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CensusRecord> load_census(const std::string& path) {
  return parse_census(read_file(path));
}

std::string dt_string(const DTCode& d) {
  if (d.crossings() <= 26) return encode_dt_compressed(d);
  std::string s = "[";
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d.entries[i]);
  }
  return s + "]";
}

std::vector<InvariantRecord> compute_invariants(
    const std::vector<CensusRecord>& records, const ComputeOptions& opts,
    const std::vector<InvariantRecord>& cache) {
  std::map<std::string, const InvariantRecord*> cached;
  for (const auto& c : cache) cached[c.name] = &c;

  std::vector<InvariantRecord> out(records.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < records.size(); ++i) {
    const CensusRecord& rec = records[i];
    InvariantRecord& r = out[i];
    r.name = rec.name;
    r.dt = dt_string(rec.dt);
    if (auto it = cached.find(rec.name);
        it != cached.end() && it->second->dt == r.dt) {
      r.jones = it->second->jones;
      r.kh = it->second->kh;
    }
    bool want_kh = opts.which == WhichInvariants::JonesAndKh;
    if (r.has_jones() && (!want_kh || r.has_kh())) continue;
    try {
      Diagram d = Diagram::realize(rec.dt);
      if (!r.has_jones()) r.jones = jones_reduced(d).canonical();
      if (want_kh && !r.has_kh() && rec.crossings <= opts.kh_max_crossings) {
        KhOptions ko;
        ko.max_crossings = opts.kh_max_crossings;
        r.kh = kh_polynomial(d, ko).canonical();
      }
    } catch (const ResourceLimitExceeded&) {
      // flagged by the missing field; the batch continues
    } catch (const NonRealizable&) {
    }
  }
  return out;
}

std::vector<ScanTarget> torus_targets(int max_crossings) {
  std::vector<ScanTarget> out;
  for (auto [m, n] : enumerate_torus_candidates(max_crossings)) {
    ScanTarget t;
    t.kind = ScanTarget::Kind::Torus;
    t.name = "T(" + std::to_string(m) + "," + std::to_string(n) + ")";
    t.jones = jones_torus(m, n);
    if (m == 2) {
      t.standard_dt = torus_2k_dt(n);
      t.has_dt = true;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<ScanTarget> twist_targets(int lo, int hi) {
  if (lo < 1 || hi < lo) throw InvalidParameters("bad twist range");
  std::vector<ScanTarget> out;
  for (int n = lo; n <= hi; ++n) {
    ScanTarget t;
    t.kind = ScanTarget::Kind::Twist;
    t.name = "m_" + std::to_string(n);
    t.jones = jones_twist(n);
    t.standard_dt = twist_dt(n);
    t.has_dt = true;
    out.push_back(std::move(t));
  }
  return out;
}

ScanTarget explicit_target(const std::string& name, const DTCode& dt) {
  ScanTarget t;
  t.kind = ScanTarget::Kind::Explicit;
  t.name = name;
  t.standard_dt = dt;
  t.has_dt = true;
  t.jones = jones_reduced(Diagram::realize(dt));
  return t;
}

std::string shadow_key(const DTCode& d) {
  const GaussCode g = dt_to_gauss(d);
  const int len = static_cast<int>(g.tokens.size());
  if (len == 0) return "";
  std::string best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int flip = 0; flip < 2; ++flip) {
      for (int rot = 0; rot < len; ++rot) {
        std::map<int, int> renumber;
        std::string key;
        for (int k = 0; k < len; ++k) {
          int idx = dir == 0 ? (rot + k) % len : (rot - k + 2 * len) % len;
          const GaussToken& tok = g.tokens[idx];
          auto [it, fresh] =
              renumber.emplace(tok.crossing, static_cast<int>(renumber.size()));
          bool over = (tok.passage == Passage::Over) != (flip == 1);
          key += over ? 'O' : 'U';
          key += std::to_string(it->second);
          key += ' ';
          (void)fresh;
        }
        if (best.empty() || key < best) best = std::move(key);
      }
    }
  }
  return best;
}

std::vector<MatchReport> scan_targets(const std::vector<InvariantRecord>& inv,
                                      const std::vector<ScanTarget>& targets,
                                      const ScanOptions& opts) {
  std::vector<MatchReport> reports;
  for (const ScanTarget& target : targets) {
    MatchReport report;
    report.target_name = target.name;
    const std::string tp = target.jones.canonical();
    const std::string tm = target.jones.mirrored().canonical();
    std::string target_kh;  // computed lazily, at most once
    bool target_kh_tried = false;
    std::string target_shadow;
    bool target_shadow_tried = false;

    for (const InvariantRecord& rec : inv) {
      if (!rec.has_jones() || (rec.jones != tp && rec.jones != tm)) continue;
      MatchFlags flags;
      flags.record_name = rec.name;
      flags.jones_equal_up_to_mirror = true;

      const DTCode rec_dt = parse_dt_any(rec.dt);
      if (target.has_dt) {
        if (!target_shadow_tried) {
          target_shadow = shadow_key(target.standard_dt);
          target_shadow_tried = true;
        }
        flags.is_same_knot_hint = shadow_key(rec_dt) == target_shadow;
      }

      if (opts.with_kh && target.has_dt &&
          target.standard_dt.crossings() <= opts.kh_max_crossings &&
          rec_dt.crossings() <= opts.kh_max_crossings) {
        try {
          if (!target_kh_tried) {
            KhOptions ko;
            ko.max_crossings = opts.kh_max_crossings;
            target_kh =
                kh_polynomial(Diagram::realize(target.standard_dt), ko)
                    .canonical();
            target_kh_tried = true;
          }
          std::string rec_kh = rec.kh;
          if (rec_kh.empty()) {
            KhOptions ko;
            ko.max_crossings = opts.kh_max_crossings;
            rec_kh = kh_polynomial(Diagram::realize(rec_dt), ko).canonical();
          }
          flags.kh_equal_up_to_mirror =
              equal_up_to_mirror(BigradedPoly::from_canonical(rec_kh),
                                 BigradedPoly::from_canonical(target_kh));
        } catch (const ResourceLimitExceeded&) {
        } catch (const NonRealizable&) {
        }
      }
      report.matches.push_back(std::move(flags));
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string mirror_canonical(const LaurentPoly& p) {
  return std::min(p.canonical(), p.mirrored().canonical());
}

std::string mirror_canonical(const BigradedPoly& p) {
  return std::min(p.canonical(), p.mirrored().canonical());
}

namespace {

std::string format_fraction(long long num, long long den) {
  // exact rational rendered to six decimals, round half up
  long long scaled = num * 1000000;
  long long q = (2 * scaled + den) / (2 * den);
  std::string digits = std::to_string(q % 1000000);
  return std::to_string(q / 1000000) + "." +
         std::string(6 - digits.size(), '0') + digits;
}

}  // namespace

std::vector<StatsRow> stats(const std::vector<InvariantRecord>& inv,
                            StatsInvariant invariant, int max_cr) {
  struct Entry {
    int cr;
    std::string key;
  };
  std::vector<Entry> entries;
  int min_cr = max_cr;
  for (const InvariantRecord& rec : inv) {
    const DTCode dt = parse_dt_any(rec.dt);
    if (dt.crossings() > max_cr) continue;
    std::string key;
    if (invariant == StatsInvariant::Jones) {
      if (!rec.has_jones())
        throw MissingInvariant("record '" + rec.name +
                               "' has no Jones polynomial");
      key = mirror_canonical(LaurentPoly::from_canonical(rec.jones));
    } else {
      if (!rec.has_kh())
        throw MissingInvariant("record '" + rec.name +
                               "' has no Khovanov polynomial");
      key = mirror_canonical(BigradedPoly::from_canonical(rec.kh));
    }
    entries.push_back({dt.crossings(), std::move(key)});
    min_cr = std::min(min_cr, dt.crossings());
  }
  std::vector<StatsRow> rows;
  if (entries.empty()) return rows;
  for (int cr = min_cr; cr <= max_cr; ++cr) {
    std::map<std::string, long long> groups;
    long long knots = 0;
    for (const Entry& e : entries) {
      if (e.cr > cr) continue;
      ++groups[e.key];
      ++knots;
    }
    StatsRow row;
    row.cr = cr;
    row.knots = knots;
    row.total = static_cast<long long>(groups.size());
    for (const auto& [k, cnt] : groups) {
      if (cnt == 1) ++row.unique;
      if (cnt == 2) ++row.almost;
    }
    row.frac_u = format_fraction(row.unique, row.total);
    row.frac_t = format_fraction(row.total, row.knots);
    row.frac_k = format_fraction(row.unique, row.knots);
    rows.push_back(std::move(row));
  }
  return rows;
}

void persist_invariants(const std::vector<InvariantRecord>& inv,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << "#khdetect-v1\n";
  for (const auto& r : inv) {
    out << r.name << '\t' << r.dt << '\t'
        << (r.has_jones() ? r.jones : std::string("-")) << '\t'
        << (r.has_kh() ? r.kh : std::string("-")) << '\n';
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

std::vector<InvariantRecord> load_invariants(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || strip(line) != "#khdetect-v1")
    throw FormatError("missing #khdetect-v1 header", 1);
  ++line_no;
  std::vector<InvariantRecord> out;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(strip(line.substr(
          start, tab == std::string::npos ? std::string::npos : tab - start)));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 4)
      throw FormatError("expected 4 tab-separated fields", line_no);
    InvariantRecord r;
    r.name = fields[0];
    r.dt = fields[1];
    if (!names.insert(r.name).second)
      throw FormatError("duplicate record '" + r.name + "'", line_no);
    try {
      parse_dt_any(r.dt);
      if (fields[2] != "-") {
        LaurentPoly::from_canonical(fields[2]);
        r.jones = fields[2];
      }
      if (fields[3] != "-") {
        BigradedPoly::from_canonical(fields[3]);
        r.kh = fields[3];
      }
    } catch (const InputError& e) {
      throw FormatError(std::string(e.what()), line_no);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace khdetect
