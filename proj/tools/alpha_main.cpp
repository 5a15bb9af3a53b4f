// alpha: exact combinatorial bounds and Hilbert-function oracle for fat
// point schemes supported on line count configurations in P^2.
//
// Exit codes: 0 success / bound holds, 1 verification failed or a bound
// failure was encountered, 2 input error.

#include <algorithm>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcc/conj.hpp"
#include "lcc/geom.hpp"
#include "lcc/keycase.hpp"
#include "lcc/oracle.hpp"
#include "lcc/scheme_io.hpp"
#include "lcc/seq.hpp"

using nlohmann::ordered_json;
using namespace lcc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct OutputOpts {
  std::string format = "table";
  std::string out_path;
  bool no_timestamp = false;
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write output to FILE");
  cmd->add_flag("--no-timestamp", opts.no_timestamp,
                "Omit the timestamp field from JSON output");
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void stamp(ordered_json& doc, const OutputOpts& opts) {
  if (!opts.no_timestamp) doc["timestamp"] = utc_timestamp();
}

void write_output(const OutputOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out_path);
  if (!f) throw std::invalid_argument("cannot write '" + opts.out_path + "'");
  f << text;
}

IntVec parse_int_list(const std::string& s) {
  IntVec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer list entry '" + item + "'");
    }
    if (pos != item.size()) {
      throw std::invalid_argument("bad integer list entry '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string join(const IntVec& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string seq_str(const DegreeSeq& w) {
  std::string s = join(w.prefix());
  if (w.tail() == DegreeSeq::Tail::Constant) {
    s += " (constant " + std::to_string(w.eventual()) + " onward)";
  } else {
    s += s.empty() ? "0 (zeros onward)" : " (zeros onward)";
  }
  return s;
}

ordered_json seq_json(const DegreeSeq& w) {
  ordered_json j;
  j["prefix"] = w.prefix();
  j["tail"] = w.tail() == DegreeSeq::Tail::Constant ? "constant" : "zero";
  return j;
}

std::string parity_str(conj::Parity p) {
  return p == conj::Parity::Even ? "even" : "odd";
}

conj::Parity parse_parity(const std::string& s) {
  if (s == "even") return conj::Parity::Even;
  if (s == "odd") return conj::Parity::Odd;
  throw std::invalid_argument("parity must be 'odd' or 'even'");
}

std::string outcome_str(conj::Outcome o) {
  return o == conj::Outcome::BoundHolds ? "BOUND_HOLDS" : "BOUND_FAILS";
}

// ---- ops ----------------------------------------------------------------

int run_ops_star(const IntVec& a, const IntVec& m, const OutputOpts& opts) {
  NonDecVec d = seq::star(a, m);
  if (opts.format == "json") {
    ordered_json doc;
    doc["result"] = d.vec();
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    write_output(opts, "result\n" + join(d.vec(), " ") + "\n");
  } else {
    write_output(opts, join(d.vec()) + "\n");
  }
  return kExitOk;
}

int run_ops_diag(const IntVec& v, const OutputOpts& opts) {
  DegreeSeq d = seq::diag(v);
  if (opts.format == "json") {
    ordered_json doc = seq_json(d);
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    write_output(opts, "prefix,tail\n" + join(d.prefix(), " ") + ",zero\n");
  } else {
    write_output(opts, seq_str(d) + "\n");
  }
  return kExitOk;
}

int run_ops_gms(const IntVec& v, const OutputOpts& opts) {
  bool g = seq::is_gms(NonDecVec(v));
  if (opts.format == "json") {
    ordered_json doc;
    doc["gms"] = g;
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else {
    write_output(opts, std::string(g ? "true" : "false") + "\n");
  }
  return kExitOk;
}

int run_ops_alpha(const IntVec& dvec, const OutputOpts& opts) {
  NonDecVec d(dvec);
  Int alpha = seq::alpha_diag_closed(d);
  Int s = seq::s_of(d);
  if (opts.format == "json") {
    ordered_json doc;
    doc["alpha"] = alpha;
    doc["s"] = s;
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else {
    write_output(opts, std::to_string(alpha) + "\n");
  }
  return kExitOk;
}

// ---- keycase ------------------------------------------------------------

ordered_json claim_json(const keycase::ClaimReport& rep) {
  ordered_json j;
  j["ell"] = rep.params.ell;
  j["t"] = rep.params.t;
  j["holds"] = rep.holds;
  j["max_phi"] = rep.max_phi;
  j["witness_j"] = rep.witness_j;
  j["twice_bound"] = keycase::claim_bound(rep.params).twice_value;
  return j;
}

std::string claim_line(const keycase::ClaimReport& rep) {
  std::ostringstream os;
  os << "ell=" << rep.params.ell << " t=" << rep.params.t
     << " holds=" << (rep.holds ? "yes" : "no") << " max_phi=" << rep.max_phi
     << " witness_j=" << rep.witness_j
     << " twice_bound=" << keycase::claim_bound(rep.params).twice_value;
  return os.str();
}

int run_keycase_verify(Int ell, Int t, const OutputOpts& opts) {
  keycase::ClaimReport rep = keycase::verify_claim(keycase::Params(ell, t));
  if (opts.format == "json") {
    ordered_json doc = claim_json(rep);
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    std::ostringstream os;
    os << "ell,t,max_phi,witness_j,twice_bound,holds\n"
       << rep.params.ell << ',' << rep.params.t << ',' << rep.max_phi << ','
       << rep.witness_j << ',' << keycase::claim_bound(rep.params).twice_value
       << ',' << (rep.holds ? "true" : "false") << '\n';
    write_output(opts, os.str());
  } else {
    write_output(opts, claim_line(rep) + "\n");
  }
  return rep.holds ? kExitOk : kExitFail;
}

int run_keycase_sweep(Int ell_max, Int t_max, int jobs,
                      const OutputOpts& opts) {
  if (ell_max < 1 || t_max < 1) {
    throw std::invalid_argument("sweep bounds must be >= 1");
  }
  std::vector<keycase::ClaimReport> reports(
      static_cast<std::size_t>(ell_max * t_max),
      keycase::ClaimReport{keycase::Params(1, 1), false, 0, 0});
  auto eval = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      Int ell = static_cast<Int>(k) / t_max + 1;
      Int t = static_cast<Int>(k) % t_max + 1;
      reports[k] = keycase::verify_claim(keycase::Params(ell, t));
    }
  };
  if (jobs <= 1) {
    eval(0, reports.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (reports.size() + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      std::size_t lo = std::min(reports.size(), w * chunk);
      std::size_t hi = std::min(reports.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(eval, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  bool all_hold = true;
  for (const auto& rep : reports) all_hold = all_hold && rep.holds;

  if (opts.format == "json") {
    ordered_json doc;
    doc["ell_max"] = ell_max;
    doc["t_max"] = t_max;
    doc["all_hold"] = all_hold;
    doc["cells"] = ordered_json::array();
    for (const auto& rep : reports) doc["cells"].push_back(claim_json(rep));
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    std::ostringstream os;
    os << "ell,t,max_phi,witness_j,twice_bound,holds\n";
    for (const auto& rep : reports) {
      os << rep.params.ell << ',' << rep.params.t << ',' << rep.max_phi << ','
         << rep.witness_j << ','
         << keycase::claim_bound(rep.params).twice_value << ','
         << (rep.holds ? "true" : "false") << '\n';
    }
    write_output(opts, os.str());
  } else {
    std::ostringstream os;
    os << "cells=" << reports.size() << " all_hold=" << (all_hold ? "yes" : "no")
       << "\n";
    for (const auto& rep : reports) {
      if (!rep.holds) os << claim_line(rep) << "\n";
    }
    write_output(opts, os.str());
  }
  return all_hold ? kExitOk : kExitFail;
}

// ---- scheme / hilbert ---------------------------------------------------

int run_scheme_reduce(const std::string& path, const std::string& apply,
                      bool with_trace, const OutputOpts& opts) {
  scheme_io::SchemeFile file = scheme_io::load_scheme(path);
  std::vector<geom::ProjLine> lines;
  std::stringstream ss(apply);
  std::string name;
  while (std::getline(ss, name, ',')) {
    lines.push_back(file.line_by_name(name));
  }
  geom::ReductionTrace trace = geom::reduce_by_sequence(file.scheme, lines);
  if (opts.format == "json") {
    ordered_json doc;
    doc["d"] = trace.d;
    doc["totally_reduced"] = trace.totally_reduced;
    if (with_trace) {
      doc["steps"] = ordered_json::array();
      for (const auto& step : trace.steps) {
        ordered_json js = ordered_json::array();
        for (const auto& [p, m] : step.items()) {
          js.push_back({{"point", p.str()}, {"mult", m}});
        }
        doc["steps"].push_back(js);
      }
    }
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    write_output(opts, "d,totally_reduced\n" + join(trace.d, " ") + "," +
                           (trace.totally_reduced ? "true" : "false") + "\n");
  } else {
    std::ostringstream os;
    os << "d=" << join(trace.d)
       << " totally_reduced=" << (trace.totally_reduced ? "yes" : "no") << "\n";
    if (with_trace) {
      for (std::size_t k = trace.steps.size(); k-- > 0;) {
        os << "Y_" << k << ":";
        for (const auto& [p, m] : trace.steps[k].items()) {
          os << " " << p.str() << "*" << m;
        }
        os << "\n";
      }
    }
    write_output(opts, os.str());
  }
  return kExitOk;
}

ordered_json hilbert_json(const oracle::HilbertResult& h) {
  ordered_json doc;
  doc["values"] = h.values.prefix();
  doc["alpha"] = h.alpha;
  doc["method"] = oracle::method_name(h.method);
  doc["primes_used"] = h.primes_used;
  return doc;
}

int run_hilbert(const std::string& path, Int t_max, bool rational,
                const OutputOpts& opts) {
  scheme_io::SchemeFile file = scheme_io::load_scheme(path);
  oracle::HilbertResult h = oracle::hilbert_exact(
      file.scheme, t_max,
      rational ? oracle::RankMode::Rational : oracle::RankMode::Modular);
  if (file.scheme.empty()) {
    std::cerr << "note: scheme is empty; alpha = 0 by convention\n";
  }
  if (opts.format == "json") {
    ordered_json doc = hilbert_json(h);
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    std::ostringstream os;
    os << "t,h\n";
    const IntVec& vals = h.values.prefix();
    for (std::size_t t = 0; t < vals.size(); ++t) {
      os << t << ',' << vals[t] << '\n';
    }
    write_output(opts, os.str());
  } else {
    std::ostringstream os;
    os << "H=" << seq_str(h.values) << "\nalpha=" << h.alpha
       << " method=" << oracle::method_name(h.method);
    if (!h.primes_used.empty()) os << " primes=" << join(h.primes_used);
    os << "\n";
    write_output(opts, os.str());
  }
  return kExitOk;
}

// ---- lcc ----------------------------------------------------------------

int run_lcc_build(const IntVec& c, const IntVec& a, Int seed,
                  const OutputOpts& opts) {
  IntVec mults = a.empty() ? IntVec(c.size(), 1) : a;
  geom::GeometricLCC lcc = geom::build_lcc(
      NonDecVec(c), mults, static_cast<std::uint64_t>(seed));
  scheme_io::SchemeFile file = scheme_io::to_scheme_file(lcc);
  write_output(opts, scheme_io::scheme_to_json(file.scheme, file.lines));
  return kExitOk;
}

ordered_json conj_report_json(const conj::Report& rep) {
  ordered_json doc;
  doc["c"] = rep.c.vec();
  doc["ell"] = conj::ell_of(rep.r, rep.parity);
  doc["r"] = rep.r;
  doc["parity"] = parity_str(rep.parity);
  doc["s_value"] = rep.s_value;
  doc["twice_bound"] = rep.bound.twice_value;
  doc["outcome"] = outcome_str(rep.outcome);
  doc["witness_index"] = rep.witness_index;
  if (rep.outcome == conj::Outcome::BoundFails) {
    doc["note"] =
        "inconclusive: the S-criterion is sufficient only; the inequality "
        "itself may still hold (probe with 'compare')";
  }
  return doc;
}

std::string conj_report_csv_row(const conj::Report& rep) {
  std::ostringstream os;
  os << join(rep.c.vec(), " ") << ',' << conj::ell_of(rep.r, rep.parity) << ','
     << rep.r << ',' << parity_str(rep.parity) << ',' << rep.s_value << ','
     << rep.bound.twice_value << ',' << outcome_str(rep.outcome);
  return os.str();
}

const char* kConjCsvHeader = "c,ell,r,parity,s_value,twice_bound,outcome";

int run_lcc_verify(const IntVec& c, Int r, const std::string& parity,
                   const OutputOpts& opts) {
  conj::Report rep =
      conj::verify_lcc_conjecture(NonDecVec(c), r, parse_parity(parity));
  if (opts.format == "json") {
    ordered_json doc = conj_report_json(rep);
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    write_output(opts,
                 std::string(kConjCsvHeader) + "\n" + conj_report_csv_row(rep) +
                     "\n");
  } else {
    std::ostringstream os;
    os << "c=" << join(rep.c.vec()) << " ell=" << conj::ell_of(rep.r, rep.parity)
       << " r=" << rep.r << " parity=" << parity_str(rep.parity)
       << " S=" << rep.s_value << " twice_bound=" << rep.bound.twice_value
       << " outcome=" << outcome_str(rep.outcome);
    if (rep.outcome == conj::Outcome::BoundFails) {
      os << " (inconclusive: sufficient criterion only)";
    }
    os << "\n";
    write_output(opts, os.str());
  }
  return rep.outcome == conj::Outcome::BoundHolds ? kExitOk : kExitFail;
}

// ---- search ---------------------------------------------------------------

int run_search(Int ell, Int t, Int cap, const std::string& parity, int jobs,
               const std::string& csv_out, const OutputOpts& opts) {
  if (cap > 12 || t > 9) {
    throw std::invalid_argument(
        "search guardrails: require cap <= 12 and t <= 9");
  }
  conj::Parity par = parse_parity(parity);
  conj::SearchResult res = conj::search_failures(ell, t, cap, par, jobs);
  const Int r = par == conj::Parity::Even ? ell / 2 : (ell + 1) / 2;

  auto failing_csv = [&]() {
    std::ostringstream os;
    os << "c,s_value,twice_bound,maximal\n";
    for (const auto& c : res.failing) {
      conj::Report rep = conj::verify_lcc_conjecture(c, r, par);
      bool maximal = std::find(res.maximal_failing.begin(),
                               res.maximal_failing.end(),
                               c) != res.maximal_failing.end();
      os << join(c.vec(), " ") << ',' << rep.s_value << ','
         << rep.bound.twice_value << ',' << (maximal ? "true" : "false")
         << '\n';
    }
    return os.str();
  };

  if (!csv_out.empty()) {
    std::ofstream f(csv_out);
    if (!f) throw std::invalid_argument("cannot write '" + csv_out + "'");
    f << failing_csv();
  }

  if (opts.format == "json") {
    ordered_json doc;
    doc["ell"] = res.ell;
    doc["t"] = res.t;
    doc["cap"] = res.cap;
    doc["parity"] = parity_str(res.parity);
    doc["scanned_count"] = res.scanned_count;
    doc["failing"] = ordered_json::array();
    for (const auto& c : res.failing) doc["failing"].push_back(c.vec());
    doc["maximal_failing"] = ordered_json::array();
    for (const auto& c : res.maximal_failing) {
      doc["maximal_failing"].push_back(c.vec());
    }
    doc["maximality_window"] = "componentwise order on [1," +
                               std::to_string(res.cap) + "]^" +
                               std::to_string(res.t);
    doc["enumeration"] = "lexicographic, deterministic, jobs-independent";
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else if (opts.format == "csv") {
    write_output(opts, failing_csv());
  } else {
    std::ostringstream os;
    os << "scanned=" << res.scanned_count << " failing=" << res.failing.size()
       << " maximal_failing=" << res.maximal_failing.size()
       << " (window [1," << res.cap << "]^" << res.t << ")\n";
    for (const auto& c : res.maximal_failing) {
      os << "maximal: " << join(c.vec()) << "\n";
    }
    write_output(opts, os.str());
  }
  return res.failing.empty() ? kExitOk : kExitFail;
}

// ---- compare / subset-extract ---------------------------------------------

int run_compare(const IntVec& c, Int ell, const IntVec& a, Int seed,
                bool rational, const OutputOpts& opts) {
  IntVec mults;
  if (!a.empty()) {
    mults = a;
  } else if (ell >= 1) {
    mults = IntVec(c.size(), ell);
  } else {
    throw std::invalid_argument("compare: give --ell or --a");
  }
  geom::GeometricLCC lcc =
      geom::build_lcc(NonDecVec(c), mults, static_cast<std::uint64_t>(seed));
  geom::ReductionTrace trace = geom::schedule_star(lcc);
  NonDecVec d(trace.d);
  DegreeSeq f = geom::hilbert_lower_bound(d);
  Int alpha_low = geom::alpha_lower_bound(d);
  geom::FatPointScheme y = lcc.scheme();
  oracle::HilbertResult h = oracle::hilbert_exact(
      y, y.total_multiplicity(),
      rational ? oracle::RankMode::Rational : oracle::RankMode::Modular);
  bool le = true, eq = true;
  Int horizon = static_cast<Int>(
      std::max(f.prefix().size(), h.values.prefix().size())) + 1;
  for (Int t = 0; t <= horizon; ++t) {
    if (f.at(t) > h.values.at(t)) le = false;
    if (f.at(t) != h.values.at(t)) eq = false;
  }
  bool gms = seq::is_gms(d);

  if (opts.format == "json") {
    ordered_json doc;
    doc["c"] = c;
    doc["a"] = mults;
    doc["seed"] = seed;
    doc["d"] = trace.d;
    doc["gms"] = gms;
    doc["f"] = seq_json(f);
    doc["hilbert"] = hilbert_json(h);
    doc["alpha_lower"] = alpha_low;
    doc["alpha_exact"] = h.alpha;
    doc["f_le_H"] = le;
    doc["f_eq_H"] = eq;
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "c=" << join(c) << " a=" << join(mults) << " seed=" << seed << "\n"
       << "d=" << join(trace.d) << " gms=" << (gms ? "yes" : "no") << "\n"
       << "f_d = " << seq_str(f) << "\n"
       << "H   = " << seq_str(h.values) << "\n"
       << "alpha_lower=" << alpha_low << " alpha_exact=" << h.alpha
       << " f<=H=" << (le ? "yes" : "no") << " f==H=" << (eq ? "yes" : "no")
       << "\n";
    write_output(opts, os.str());
  }
  return le ? kExitOk : kExitFail;
}

int run_subset_extract(const std::string& path, const OutputOpts& opts) {
  scheme_io::SchemeFile file = scheme_io::load_scheme(path);
  const geom::FatPointScheme& b = file.scheme;
  geom::FatPointScheme a = oracle::extract_generic_subset(b);

  Int alpha_b = oracle::alpha_exact(b, oracle::RankMode::Rational);
  oracle::HilbertResult ha =
      oracle::hilbert_exact(a, alpha_b, oracle::RankMode::Rational);
  IntVec delta_h;
  for (Int t = 0; t <= alpha_b; ++t) {
    delta_h.push_back(ha.values.at(t) - (t == 0 ? 0 : ha.values.at(t - 1)));
  }
  IntVec expected;
  for (Int t = 1; t <= alpha_b; ++t) expected.push_back(t);
  expected.push_back(0);
  bool verified = ha.alpha == alpha_b &&
                  static_cast<Int>(a.point_count()) ==
                      oracle::choose2(alpha_b + 1) &&
                  delta_h == expected;

  if (opts.format == "json") {
    ordered_json doc;
    doc["alpha"] = alpha_b;
    doc["subset_size"] = a.point_count();
    doc["points"] = ordered_json::array();
    for (const auto& [p, m] : a.items()) doc["points"].push_back(p.str());
    doc["delta_h"] = delta_h;
    doc["verified"] = verified;
    stamp(doc, opts);
    write_output(opts, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "alpha=" << alpha_b << " subset_size=" << a.point_count()
       << " delta_h=" << join(delta_h)
       << " verified=" << (verified ? "yes" : "no") << "\n";
    for (const auto& [p, m] : a.items()) os << "point " << p.str() << "\n";
    write_output(opts, os.str());
  }
  return verified ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact initial-degree bounds for fat point schemes on line count "
      "configurations"};
  app.require_subcommand(1);

  OutputOpts opts;

  // ops
  auto* ops = app.add_subcommand("ops", "Integer-vector operators");
  ops->require_subcommand(1);
  std::string ops_a, ops_m, ops_v, ops_d;
  auto* ops_star = ops->add_subcommand("star", "a * m = sorted(a o m)");
  ops_star->add_option("--a", ops_a, "Repetition vector")->required();
  ops_star->add_option("--m", ops_m, "Base vector")->required();
  add_output_opts(ops_star, opts);
  auto* ops_diag = ops->add_subcommand("diag", "Anti-diagonal counts of C_v");
  ops_diag->add_option("--v", ops_v, "Row-count vector")->required();
  add_output_opts(ops_diag, opts);
  auto* ops_gms =
      ops->add_subcommand("gms", "Generalized monotone sequence test");
  ops_gms->add_option("--v", ops_v, "Non-decreasing vector")->required();
  add_output_opts(ops_gms, opts);
  auto* ops_alpha =
      ops->add_subcommand("alpha", "alpha(diag(d)) by the closed form");
  ops_alpha->add_option("--d", ops_d, "Non-decreasing vector")->required();
  add_output_opts(ops_alpha, opts);

  // keycase
  auto* kc = app.add_subcommand("keycase", "Phi bounds for c = (1,...,t)");
  kc->require_subcommand(1);
  Int kc_ell = 0, kc_t = 0, kc_ell_max = 0, kc_t_max = 0;
  int kc_jobs = 1;
  auto* kc_verify = kc->add_subcommand("verify", "Scan phi for one (ell, t)");
  kc_verify->add_option("--ell", kc_ell, "Multiplicity")->required();
  kc_verify->add_option("--t", kc_t, "Number of lines")->required();
  add_output_opts(kc_verify, opts);
  auto* kc_sweep = kc->add_subcommand("sweep", "Scan a grid of (ell, t)");
  kc_sweep->add_option("--ell-max", kc_ell_max, "Largest ell")->required();
  kc_sweep->add_option("--t-max", kc_t_max, "Largest t")->required();
  kc_sweep->add_option("--jobs", kc_jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  add_output_opts(kc_sweep, opts);

  // scheme
  auto* scheme = app.add_subcommand("scheme", "Fat point scheme operations");
  scheme->require_subcommand(1);
  std::string sch_path, sch_apply;
  bool sch_trace = false;
  auto* sch_reduce =
      scheme->add_subcommand("reduce", "Residuate by a line sequence");
  sch_reduce->add_option("--scheme", sch_path, "Scheme JSON file")->required();
  sch_reduce
      ->add_option("--apply", sch_apply,
                   "Comma-separated line names, in application order")
      ->required();
  sch_reduce->add_flag("--trace", sch_trace, "Include intermediate schemes");
  add_output_opts(sch_reduce, opts);

  // lcc
  auto* lcc_cmd =
      app.add_subcommand("lcc", "Line count configuration workflows");
  lcc_cmd->require_subcommand(1);
  std::string lcc_c, lcc_a, lcc_parity;
  Int lcc_seed = 0, lcc_r = 0;
  auto* lcc_build =
      lcc_cmd->add_subcommand("build", "Realize a configuration over Q");
  lcc_build->add_option("--c", lcc_c, "Type vector (non-decreasing)")
      ->required();
  lcc_build->add_option("--a", lcc_a, "Multiplicities (default all 1)");
  lcc_build->add_option("--seed", lcc_seed, "RNG seed")->capture_default_str();
  add_output_opts(lcc_build, opts);
  auto* lcc_verify = lcc_cmd->add_subcommand(
      "verify", "S-criterion for the initial-degree inequality");
  lcc_verify->add_option("--c", lcc_c, "Type vector (non-decreasing)")
      ->required();
  lcc_verify->add_option("--r", lcc_r, "Family parameter r >= 1")->required();
  lcc_verify->add_option("--parity", lcc_parity, "odd (ell=2r-1) or even (ell=2r)")
      ->required();
  add_output_opts(lcc_verify, opts);

  // search
  Int se_ell = 0, se_t = 0, se_cap = 0;
  std::string se_parity, se_csv_out;
  int se_jobs = 1;
  auto* search =
      app.add_subcommand("search", "Failing type vectors for the S-criterion");
  search->add_option("--ell", se_ell, "Uniform multiplicity")->required();
  search->add_option("--t", se_t, "Type length (<= 9)")->required();
  search->add_option("--cap", se_cap, "Entry cap (<= 12)")->required();
  search->add_option("--parity", se_parity, "odd or even")->required();
  search->add_option("--jobs", se_jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  search->add_option("--csv-out", se_csv_out,
                     "Also write the failing vectors as CSV to FILE");
  add_output_opts(search, opts);

  // hilbert
  std::string hi_path;
  Int hi_tmax = 0;
  bool hi_rational = false;
  auto* hilbert =
      app.add_subcommand("hilbert", "Exact Hilbert function of a scheme");
  hilbert->add_option("--scheme", hi_path, "Scheme JSON file")->required();
  hilbert->add_option("--tmax", hi_tmax,
                      "Highest degree (raised to the sum of multiplicities)");
  hilbert->add_flag("--rational", hi_rational,
                    "Use the rational path instead of two-prime certification");
  add_output_opts(hilbert, opts);

  // compare
  std::string co_c, co_a;
  Int co_ell = 0, co_seed = 0;
  bool co_rational = false;
  auto* compare = app.add_subcommand(
      "compare", "Realize a configuration and compare f_d with the oracle");
  compare->add_option("--c", co_c, "Type vector (non-decreasing)")->required();
  compare->add_option("--ell", co_ell, "Uniform multiplicity");
  compare->add_option("--a", co_a, "Per-line multiplicities");
  compare->add_option("--seed", co_seed, "RNG seed")->capture_default_str();
  compare->add_flag("--rational", co_rational, "Rational rank path");
  add_output_opts(compare, opts);

  // subset-extract
  std::string sx_path;
  auto* sx = app.add_subcommand(
      "subset-extract", "Generic-position subset with the same alpha");
  sx->add_option("--scheme", sx_path, "Scheme JSON file (all multiplicities 1)")
      ->required();
  add_output_opts(sx, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitInput;
  }

  try {
    if (ops_star->parsed()) {
      return run_ops_star(parse_int_list(ops_a), parse_int_list(ops_m), opts);
    }
    if (ops_diag->parsed()) return run_ops_diag(parse_int_list(ops_v), opts);
    if (ops_gms->parsed()) return run_ops_gms(parse_int_list(ops_v), opts);
    if (ops_alpha->parsed()) return run_ops_alpha(parse_int_list(ops_d), opts);
    if (kc_verify->parsed()) return run_keycase_verify(kc_ell, kc_t, opts);
    if (kc_sweep->parsed()) {
      return run_keycase_sweep(kc_ell_max, kc_t_max, kc_jobs, opts);
    }
    if (sch_reduce->parsed()) {
      return run_scheme_reduce(sch_path, sch_apply, sch_trace, opts);
    }
    if (lcc_build->parsed()) {
      return run_lcc_build(parse_int_list(lcc_c),
                           lcc_a.empty() ? IntVec{} : parse_int_list(lcc_a),
                           lcc_seed, opts);
    }
    if (lcc_verify->parsed()) {
      return run_lcc_verify(parse_int_list(lcc_c), lcc_r, lcc_parity, opts);
    }
    if (search->parsed()) {
      return run_search(se_ell, se_t, se_cap, se_parity, se_jobs, se_csv_out,
                        opts);
    }
    if (hilbert->parsed()) {
      return run_hilbert(hi_path, hi_tmax, hi_rational, opts);
    }
    if (compare->parsed()) {
      return run_compare(parse_int_list(co_c), co_ell,
                         co_a.empty() ? IntVec{} : parse_int_list(co_a),
                         co_seed, co_rational, opts);
    }
    if (sx->parsed()) return run_subset_extract(sx_path, opts);
    std::cerr << "no subcommand given\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
