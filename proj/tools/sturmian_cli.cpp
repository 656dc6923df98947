// Command-line front end: one subcommand per library area, text or JSON output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sturmian/check/acceptance.hpp"
#include "sturmian/embedding.hpp"
#include "sturmian/factors.hpp"
#include "sturmian/intervals.hpp"
#include "sturmian/localmove.hpp"
#include "sturmian/measure.hpp"
#include "sturmian/parse.hpp"
#include "sturmian/partition.hpp"
#include "sturmian/symmetry.hpp"
#include "sturmian/words.hpp"

using json = nlohmann::ordered_json;
using namespace sturmian;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Bad or inconsistent arguments; library errors map to the same exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "text";
  bool json_flag = false;
  int digits = 20;
  bool is_json() const { return json_flag || format == "json"; }
};

// exact expression plus a decimal with `digits` significant digits
json number(const QuadNumber& x, int digits) {
  return {{"exact", x.str()}, {"decimal", x.decimal(digits)}, {"digits", digits}};
}

json interval(const ExactInterval& iv, int digits) { return {{"lo", number(iv.lo, digits)}, {"hi", number(iv.hi, digits)}}; }

std::string text_number(const QuadNumber& x, int digits) {
  if (x.is_integer()) return x.str();
  return x.str() + " ~ " + x.decimal(digits);
}

std::string text_interval(const ExactInterval& iv, int digits) {
  return "[" + text_number(iv.lo, digits) + ", " + text_number(iv.hi, digits) + ")";
}

void emit(const Output& out, const json& j, const std::string& text) {
  if (out.is_json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string label_name(BlockLabel l) { return l == BlockLabel::prev ? "prev" : "cur"; }

// ---- word

struct WordArgs {
  std::string alpha = "golden", theta = "0", alphabet = "binary";
  std::int64_t lo = 1, hi = 20;
  std::optional<int> sn;
};

int run_word(const WordArgs& a, const Output& out) {
  Alpha alpha = parse_alpha(a.alpha);
  Alphabet ab = a.alphabet == "ab" ? Alphabet::ab : Alphabet::binary;
  if (a.sn) {
    if (*a.sn < -1) throw UsageError("--sn needs n >= -1");
    Word s = *a.sn == -1 ? Word("1") : build_sn(alpha, *a.sn);
    json j{{"command", "word"}, {"alpha", alpha.spec()}, {"n", *a.sn}, {"length", s.size()}, {"letters", s.str(ab)}};
    emit(out, j, s.str(ab) + "\n");
    return kOk;
  }
  if (a.hi < a.lo) throw UsageError("--hi must be >= --lo");
  HullPoint p = parse_theta(a.theta);
  Window w = window(p, alpha, a.lo, a.hi);
  json j{{"command", "word"}, {"alpha", alpha.spec()}, {"theta", p.str()}, {"lo", a.lo}, {"hi", a.hi},
         {"letters", w.letters.str(ab)}};
  emit(out, j, w.letters.str(ab) + "\n");
  return kOk;
}

// ---- partition

struct PartitionArgs {
  std::string alpha = "golden", theta = "0";
  int level = 1;
  std::int64_t lo = -20, hi = 20;
};

int run_partition(const PartitionArgs& a, const Output& out) {
  Alpha alpha = parse_alpha(a.alpha);
  HullPoint p = parse_theta(a.theta);
  if (a.hi < a.lo) throw UsageError("--hi must be >= --lo");
  PartitionView v = partition_window(p, alpha, a.level, a.lo, a.hi);
  IsolationReport iso = verify_isolation(v, alpha);
  json blocks = json::array();
  std::ostringstream text;
  text << "level " << v.level << " |s_" << v.level - 1 << "| = " << v.len_prev << " |s_" << v.level << "| = " << v.len_cur
       << "\n";
  for (const auto& b : v.blocks) {
    blocks.push_back({{"start", b.start}, {"end", v.end(b) - 1}, {"label", label_name(b.label)}});
    text << b.start << ".." << v.end(b) - 1 << " s_" << (b.label == BlockLabel::prev ? v.level - 1 : v.level) << "\n";
  }
  text << "isolation " << (iso.ok ? "ok" : "violated") << "\n";
  json j{{"command", "partition"}, {"alpha", alpha.spec()}, {"theta", p.str()}, {"level", v.level},
         {"lo", v.lo}, {"hi", v.hi}, {"len_prev", v.len_prev}, {"len_cur", v.len_cur}, {"blocks", blocks},
         {"isolation_ok", iso.ok}, {"violations", iso.violations}};
  emit(out, j, text.str());
  return kOk;
}

// ---- embed / invert / theta

struct EmbedArgs {
  std::string alpha = "golden", theta = "0";
  std::size_t len = 20;
};

int run_embed(const EmbedArgs& a, const Output& out) {
  Alpha alpha = parse_alpha(a.alpha);
  HullPoint p = parse_theta(a.theta);
  OpSeq ops = phi_prefix(p, alpha, a.len);
  json j{{"command", "embed"}, {"alpha", alpha.spec()}, {"theta", p.str()}, {"len", a.len}, {"ops", ops.str()},
         {"r_count", ops.count(Op::R)}, {"l_count", ops.count(Op::L)}};
  if (ops.annotated()) j["copies"] = ops.copies;
  emit(out, j, ops.str() + "\n");
  return kOk;
}

struct InvertArgs {
  std::string alpha = "golden", ops;
  std::int64_t radius = 20;
};

int run_invert(const InvertArgs& a, const Output& out) {
  Alpha alpha = parse_alpha(a.alpha);
  OpSeq ops = OpSeq::parse(a.ops);
  Reconstruction rec = reconstruct(ops, alpha);
  Window w = rec.window(-a.radius, a.radius);
  json completions = json::array();
  for (const auto& h : rec.r_tail_completions) completions.push_back(h.str());
  json j{{"command", "invert"}, {"alpha", alpha.spec()}, {"ops", ops.str()}, {"level", rec.level},
         {"block_start", rec.block_start.str()}, {"determined_lo", rec.lo.str()}, {"determined_hi", rec.hi.str()},
         {"window_lo", w.lo()}, {"window_hi", w.hi()}, {"letters", w.letters.str()}, {"r_tail_completions", completions}};
  std::ostringstream text;
  text << "determined " << rec.lo.str() << ".." << rec.hi.str() << "\n";
  text << w.lo() << ".." << w.hi() << " " << w.letters.str() << "\n";
  emit(out, j, text.str());
  return kOk;
}

struct ThetaArgs {
  std::string ops, tail = "none";
};

int run_theta(const ThetaArgs& a, const Output& out) {
  OpSeq ops = OpSeq::parse(a.ops);
  ExactInterval iv = theta_from_opseq(ops);
  QuadNumber partial = theta_series(ops);
  json j{{"command", "theta"}, {"ops", ops.str()}, {"interval", interval(iv, out.digits)},
         {"width", number(iv.width(), out.digits)}, {"series_partial", number(partial, out.digits)},
         {"partial_in_interval", iv.lo <= partial && partial <= iv.hi}};
  std::ostringstream text;
  text << "interval " << text_interval(iv, out.digits) << "\n";
  text << "series " << text_number(partial, out.digits) << "\n";
  if (a.tail != "none") {
    Op t = a.tail == "R" ? Op::R : Op::L;
    QuadNumber lim = theta_series_limit(ops, t);
    j["tail"] = a.tail;
    j["limit"] = number(lim, out.digits);
    text << "limit with " << a.tail << " forever " << text_number(lim, out.digits) << "\n";
  }
  emit(out, j, text.str());
  return kOk;
}

// ---- classify / exhaust / gaps

struct NArgs {
  std::string alpha = "golden";
  std::int64_t n = 4;
};

json word_list(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

int run_classify(const NArgs& a, const Output& out) {
  Alpha alpha = parse_alpha(a.alpha);
  FactorClassification c = classify(alpha, a.n);
  json j{{"command", "classify"}, {"alpha", alpha.spec()}, {"n", c.n}, {"k", c.k}, {"j", c.j}, {"l", c.l},
         {"classes", {{"A", word_list(c.A)}, {"B", word_list(c.B)}, {"C", word_list(c.C)}}},
         {"sizes", {{"A", c.A.size()}, {"B", c.B.size()}, {"C", c.C.size()}}},
         {"frequencies",
          {{"A", number(c.freq.A, out.digits)}, {"B", number(c.freq.B, out.digits)}, {"C", number(c.freq.C, out.digits)}}},
         {"formula", c.freq_formula}};
  std::ostringstream text;
  auto line = [&](const char* name, const std::vector<Word>& ws, const QuadNumber& f) {
    text << name << " (" << ws.size() << ", freq " << text_number(f, out.digits) << "):";
    for (const auto& w : ws) text << " " << w.str();
    text << "\n";
  };
  line("A", c.A, c.freq.A);
  line("B", c.B, c.freq.B);
  line("C", c.C, c.freq.C);
  emit(out, j, text.str());
  return kOk;
}

int run_exhaust(const NArgs& a, const Output& out) {
  Alpha alpha = parse_alpha(a.alpha);
  std::int64_t f = exhausting_point(alpha, a.n);
  std::int64_t g = g_point(alpha, a.n);
  json j{{"command", "exhaust"}, {"alpha", alpha.spec()}, {"n", a.n}, {"f", f}, {"g", g}};
  emit(out, j, std::to_string(f) + "\n");
  return kOk;
}

int run_gaps(const NArgs& a, const Output& out) {
  Alpha alpha = parse_alpha(a.alpha);
  if (a.n < 1) throw UsageError("--n must be >= 1");
  GapStats st = three_distance(alpha, static_cast<std::size_t>(a.n));
  json gaps = json::array();
  for (auto [dm, dj] : st.gaps) gaps.push_back({{"dm", dm}, {"dj", dj}});
  json classes = json::array();
  std::ostringstream text;
  text << st.gaps.size() << " gaps, " << st.classes.size() << " distinct\n";
  for (const auto& c : st.classes) {
    classes.push_back({{"dm", c.dm}, {"dj", c.dj}, {"width", number(c.width, out.digits)}, {"count", c.count}});
    text << text_number(c.width, out.digits) << " x" << c.count << "\n";
  }
  json j{{"command", "gaps"}, {"alpha", alpha.spec()}, {"n", a.n}, {"gap_count", st.gaps.size()},
         {"distinct_count", st.classes.size()}, {"gaps", gaps}, {"distinct", classes}};
  emit(out, j, text.str());
  return kOk;
}

// ---- measure

struct MeasureArgs {
  std::string p = "1/tau", mode = "exponent", x = "1/2", eps = "1/1000000";
  int depth = 4;
  std::int64_t trials = 10000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
};

int run_measure(const MeasureArgs& a, const Output& out) {
  MeasureParams params(parse_quad(a.p));
  json j{{"command", "measure"}, {"mode", a.mode}, {"p", number(params.p, out.digits)}};
  std::ostringstream text;
  if (a.mode == "cylinders") {
    json rows = json::array();
    QuadNumber mass_sum(0), width_sum(0);
    text << "ops,k,l,lo,hi,width,mass\n";
    for (const auto& [ops, wi] : cylinders_at_depth(params, a.depth)) {
      mass_sum += wi.mass;
      width_sum += wi.interval.width();
      rows.push_back({{"ops", ops.str()}, {"k", wi.k}, {"l", wi.l}, {"interval", interval(wi.interval, out.digits)},
                      {"width", number(wi.interval.width(), out.digits)}, {"mass", number(wi.mass, out.digits)}});
      text << ops.str() << "," << wi.k << "," << wi.l << "," << wi.interval.lo.decimal(out.digits) << ","
           << wi.interval.hi.decimal(out.digits) << "," << wi.interval.width().decimal(out.digits) << ","
           << wi.mass.decimal(out.digits) << "\n";
    }
    j["depth"] = a.depth;
    j["cylinders"] = rows;
    j["mass_sum"] = number(mass_sum, out.digits);
    j["width_sum"] = number(width_sum, out.digits);
  } else if (a.mode == "cdf") {
    QuadNumber x = parse_quad(a.x);
    CdfEnclosure e = cdf(x, params, parse_rational(a.eps));
    j["x"] = number(x, out.digits);
    j["lo"] = number(e.lo, out.digits);
    j["hi"] = number(e.hi, out.digits);
    j["depth"] = e.depth;
    text << "F(" << x.str() << ") in [" << text_number(e.lo, out.digits) << ", " << text_number(e.hi, out.digits)
         << "] at depth " << e.depth << "\n";
  } else if (a.mode == "exponent") {
    ExponentResult r = singularity_exponent(params);
    long double lim = local_dimension_limit(params);
    j["exponent"] = static_cast<double>(r.value);
    j["in_regime"] = r.in_regime;
    j["residual"] = static_cast<double>(r.residual);
    j["local_dimension_limit"] = static_cast<double>(lim);
    char buf[160];
    std::snprintf(buf, sizeof buf, "exponent %.15Lg (residual %.3Lg, %s)\nlocal dimension limit %.15Lg\n", r.value,
                  r.residual, r.in_regime ? "in regime" : "outside (1/tau^2, 1/2)", lim);
    text << buf;
  } else if (a.mode == "mc") {
    if (!a.seed) throw UsageError("measure --mode mc needs --seed");
    MonteCarloSummary s = mc_local_dimension(params, a.depth, a.trials, *a.seed, a.threads);
    long double lim = local_dimension_limit(params);
    j["depth"] = s.depth;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["mean"] = s.mean;
    j["stddev"] = s.stddev;
    j["ci95"] = {s.ci_lo, s.ci_hi};
    j["mean_l_fraction"] = s.mean_l_fraction;
    j["fraction_l_above"] = s.fraction_l_above ? json(*s.fraction_l_above) : json(nullptr);
    j["local_dimension_limit"] = static_cast<double>(lim);
    char buf[200];
    std::snprintf(buf, sizeof buf, "mean %.10f stddev %.10f ci95 [%.10f, %.10f]\nlimit %.10Lf\n", s.mean, s.stddev,
                  s.ci_lo, s.ci_hi, lim);
    text << buf;
  } else {
    throw UsageError("unknown measure mode " + a.mode);
  }
  emit(out, j, text.str());
  return kOk;
}

// ---- symmetry

struct SymmetryArgs {
  std::string mode = "point", which = "AA";
  std::int64_t radius = 20;
  int n = 4;
  std::size_t len = 40;
};

int run_symmetry(const SymmetryArgs& a, const Output& out) {
  json j{{"command", "symmetry"}, {"mode", a.mode}};
  std::ostringstream text;
  int code = kOk;
  if (a.mode == "point") {
    Symmetric which = a.which == "A" ? Symmetric::A : (a.which == "B" ? Symmetric::B : Symmetric::AA);
    SymmetricPoint sp = symmetric_point(which);
    Window w = sp.window(a.radius);
    bool sym = w.letters.is_palindrome();
    j["which"] = symmetric_name(which);
    j["theta"] = sp.point.str();
    j["lo"] = w.lo();
    j["hi"] = w.hi();
    j["letters"] = w.letters.str();
    j["mirror_symmetric"] = sym;
    text << "v_" << symmetric_name(which) << " theta = " << sp.point.str() << "\n"
         << w.lo() << ".." << w.hi() << " " << w.letters.str() << "\n"
         << (sym ? "mirror symmetric" : "not mirror symmetric") << "\n";
  } else if (a.mode == "h") {
    HDecomposition d = h_word_direct(a.n);
    bool agree = h_word_recursive(a.n) == d.h;
    j["n"] = a.n;
    j["h"] = d.h.str();
    j["center"] = d.center ? json(std::string(1, d.center)) : json(nullptr);
    j["family"] = d.family;
    j["recursion_agrees"] = agree;
    text << "h_" << a.n << " = " << (d.h.empty() ? "(empty)" : d.h.str()) << "\n";
    if (!agree) code = kFailed;
  } else if (a.mode == "sigma") {
    PrimedWord f = sigma_fixed_point(a.len);
    Word proj = f.projection();
    bool match = proj == symmetric_point(Symmetric::AA).right_flank(a.len);
    j["len"] = a.len;
    j["fixed_point"] = f.str();
    j["projection"] = proj.str();
    j["matches_v_AA"] = match;
    text << f.str() << "\n" << proj.str() << "\n" << (match ? "matches v_AA" : "differs from v_AA") << "\n";
    if (!match) code = kFailed;
  } else if (a.mode == "identities") {
    json checks = json::array();
    for (const auto& c : prime_identity_check(a.n)) {
      checks.push_back({{"name", c.name}, {"ok", c.ok()}});
      text << c.name << " " << (c.ok() ? "ok" : "FAILED") << "\n";
      if (!c.ok()) code = kFailed;
    }
    j["n"] = a.n;
    j["checks"] = checks;
  } else {
    throw UsageError("unknown symmetry mode " + a.mode);
  }
  emit(out, j, text.str());
  return code;
}

// ---- localmove

struct LocalmoveArgs {
  std::string alpha = "golden", theta = "0";
  std::int64_t site = -1, cap = 10000, boundary = 0;
  int forms = 0;
};

int run_localmove(const LocalmoveArgs& a, const Output& out) {
  Alpha alpha = parse_alpha(a.alpha);
  HullPoint p = parse_theta(a.theta);
  auto w = break_witness(p, alpha, a.site, a.cap);
  json j{{"command", "localmove"}, {"alpha", alpha.spec()}, {"theta", p.str()}, {"site", a.site}, {"cap", a.cap}};
  std::ostringstream text;
  if (w) {
    j["witness"] = {{"factor", w->factor.str()}, {"start", w->start}, {"length", w->length()}};
    text << "witness " << w->factor.str() << " at " << w->start << "\n";
  } else {
    j["witness"] = nullptr;
    text << "no witness within cap " << a.cap << "\n";
  }
  if (a.forms > 0) {
    FormSequence fs = boundary_forms(p, alpha, a.boundary, a.forms);
    json fj = json::array();
    text << "forms";
    for (auto f : fs.forms) {
      fj.push_back(form_name(f));
      text << " " << form_name(f);
    }
    text << (fs.alternates ? " (alternating)" : "") << "\n";
    j["boundary"] = a.boundary;
    j["forms"] = fj;
    j["alternates"] = fs.alternates;
  }
  emit(out, j, text.str());
  return kOk;
}

// ---- verify

struct VerifyArgs {
  std::vector<int> only;
  bool timing = false;
};

int run_verify(const VerifyArgs& a, const Output& out) {
  std::set<int> only(a.only.begin(), a.only.end());
  for (int id : only)
    if (id < 1 || id > static_cast<int>(acceptance::criteria().size())) throw UsageError("no criterion " + std::to_string(id));
  auto results = acceptance::run_all(only);
  bool all = true;
  json rows = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    all = all && r.pass;
    json row{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
    if (a.timing) row["seconds"] = r.seconds;
    rows.push_back(row);
    text << acceptance::format_line(r, a.timing) << "\n";
  }
  json j{{"command", "verify"}, {"pass", all}, {"criteria", rows}};
  emit(out, j, text.str());
  return all ? kOk : kFailed;
}

void add_output(CLI::App* sub, Output& out) {
  sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--json", out.json_flag, "Same as --format json");
  sub->add_option("--digits", out.digits, "Decimal digits for approximations")->check(CLI::Range(1, 200));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on circle-map (Sturmian) sequences"};
  app.require_subcommand(1);
  Output out;

  WordArgs word;
  auto* s_word = app.add_subcommand("word", "Letters of a hull element, or s_n");
  s_word->add_option("--alpha", word.alpha);
  s_word->add_option("--theta", word.theta, "0, 1/2, r+s*alpha or prime:m");
  s_word->add_option("--lo", word.lo);
  s_word->add_option("--hi", word.hi);
  s_word->add_option("--sn", word.sn, "Print s_n instead of a window");
  s_word->add_option("--alphabet", word.alphabet)->check(CLI::IsMember({"binary", "ab"}));
  add_output(s_word, out);

  PartitionArgs part;
  auto* s_part = app.add_subcommand("partition", "The (n-1, n)-partition of a window");
  s_part->add_option("--alpha", part.alpha);
  s_part->add_option("--theta", part.theta);
  s_part->add_option("--level", part.level)->check(CLI::Range(1, 60));
  s_part->add_option("--lo", part.lo);
  s_part->add_option("--hi", part.hi);
  add_output(s_part, out);

  EmbedArgs embed;
  auto* s_embed = app.add_subcommand("embed", "First operations of the coding of a hull element");
  s_embed->add_option("--alpha", embed.alpha);
  s_embed->add_option("--theta", embed.theta);
  s_embed->add_option("--len", embed.len)->check(CLI::Range(1, 10000));
  add_output(s_embed, out);

  InvertArgs inv;
  auto* s_inv = app.add_subcommand("invert", "Letters determined by a coding prefix");
  s_inv->add_option("--alpha", inv.alpha);
  s_inv->add_option("--ops", inv.ops, "R/L string")->required();
  s_inv->add_option("--radius", inv.radius)->check(CLI::Range(0, 1000000));
  add_output(s_inv, out);

  ThetaArgs th;
  auto* s_theta = app.add_subcommand("theta", "Theta interval and series of a golden coding prefix");
  s_theta->add_option("--ops", th.ops)->required();
  s_theta->add_option("--tail", th.tail, "Continue with R or L forever")->check(CLI::IsMember({"none", "R", "L"}));
  add_output(s_theta, out);

  NArgs cls;
  auto* s_cls = app.add_subcommand("classify", "Factor classes and frequencies for length n");
  s_cls->add_option("--alpha", cls.alpha);
  s_cls->add_option("--n", cls.n)->check(CLI::Range(2, 100000));
  add_output(s_cls, out);

  NArgs exh;
  auto* s_exh = app.add_subcommand("exhaust", "Exhausting point f(n)");
  s_exh->add_option("--alpha", exh.alpha);
  s_exh->add_option("--n", exh.n)->check(CLI::Range(2, 1000000));
  add_output(s_exh, out);

  NArgs gap;
  auto* s_gap = app.add_subcommand("gaps", "Gaps of {0} and -j alpha, j = 1..n");
  s_gap->add_option("--alpha", gap.alpha);
  s_gap->add_option("--n", gap.n)->check(CLI::Range(1, 1000000));
  add_output(s_gap, out);

  MeasureArgs meas;
  auto* s_meas = app.add_subcommand("measure", "Random-embedding measure");
  s_meas->add_option("--p", meas.p, "R probability: rational, decimal, 1/tau or quad:a,b,c,d");
  s_meas->add_option("--mode", meas.mode)->check(CLI::IsMember({"cylinders", "cdf", "exponent", "mc"}));
  s_meas->add_option("--depth", meas.depth)->check(CLI::Range(0, 1000000));
  s_meas->add_option("--trials", meas.trials)->check(CLI::Range(1, 100000000));
  s_meas->add_option("--seed", meas.seed);
  s_meas->add_option("--threads", meas.threads);
  s_meas->add_option("--x", meas.x, "cdf argument");
  s_meas->add_option("--eps", meas.eps, "cdf enclosure width");
  add_output(s_meas, out);

  SymmetryArgs sym;
  auto* s_sym = app.add_subcommand("symmetry", "Symmetric points, h_n, sigma and the t'/h identities");
  s_sym->add_option("--mode", sym.mode)->check(CLI::IsMember({"point", "h", "sigma", "identities"}));
  s_sym->add_option("--which", sym.which)->check(CLI::IsMember({"AA", "A", "B"}));
  s_sym->add_option("--radius", sym.radius)->check(CLI::Range(0, 1000000));
  s_sym->add_option("--n", sym.n)->check(CLI::Range(1, 30));
  s_sym->add_option("--len", sym.len)->check(CLI::Range(1, 1000000));
  add_output(s_sym, out);

  LocalmoveArgs lm;
  auto* s_lm = app.add_subcommand("localmove", "Witness that an exchange leaves the hull");
  s_lm->add_option("--alpha", lm.alpha);
  s_lm->add_option("--theta", lm.theta);
  s_lm->add_option("--site", lm.site, "Exchange letters at site and site + 1");
  s_lm->add_option("--cap", lm.cap)->check(CLI::Range(2, 10000000));
  s_lm->add_option("--forms", lm.forms, "Report boundary forms for levels 1..N")->check(CLI::Range(0, 40));
  s_lm->add_option("--boundary", lm.boundary, "Forms are read at the boundary between m and m + 1");
  add_output(s_lm, out);

  VerifyArgs ver;
  auto* s_ver = app.add_subcommand("verify", "Run the acceptance suite");
  s_ver->add_option("--only", ver.only, "Criterion ids")->delimiter(',');
  s_ver->add_flag("--timing", ver.timing, "Include run times");
  add_output(s_ver, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*s_word) return run_word(word, out);
    if (*s_part) return run_partition(part, out);
    if (*s_embed) return run_embed(embed, out);
    if (*s_inv) return run_invert(inv, out);
    if (*s_theta) return run_theta(th, out);
    if (*s_cls) return run_classify(cls, out);
    if (*s_exh) return run_exhaust(exh, out);
    if (*s_gap) return run_gaps(gap, out);
    if (*s_meas) return run_measure(meas, out);
    if (*s_sym) return run_symmetry(sym, out);
    if (*s_lm) return run_localmove(lm, out);
    if (*s_ver) return run_verify(ver, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
