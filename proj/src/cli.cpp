#include "hypoh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>

#include "hypoh/bivar.hpp"
#include "hypoh/census.hpp"
#include "hypoh/disc_class.hpp"
#include "hypoh/format.hpp"
#include "hypoh/report.hpp"
#include "hypoh/wreath.hpp"

namespace hypoh {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t p = 0;
  unsigned k = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string format = "json";
  std::string out;
  bool deterministic = false;
};

FieldPtr field_of(const Common& c) {
  if (c.p == 0) throw UsageError("--p is required for this command");
  return make_field(c.p, c.k);
}

Format format_of(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  return Format::json;
}

struct CensusArgs {
  unsigned n = 0;
  std::vector<std::string> fs;
  std::vector<std::string> targets;
  std::uint64_t samples = 0;
  bool raw = false;
};

CensusSpec census_spec(const Common& c, const CensusArgs& a) {
  CensusSpec spec;
  spec.ctx = field_of(c);
  spec.n = a.n;
  for (const auto& f : a.fs) spec.fs.push_back(parse_poly(spec.ctx, f));
  spec.sample = a.samples > 0;
  spec.samples = a.samples;
  spec.seed = c.seed;
  spec.raw = a.raw;
  spec.threads = c.threads;
  if (!a.targets.empty()) {
    std::vector<FactType> t;
    for (const auto& s : a.targets) t.push_back(parse_fact_type(s));
    spec.targets = t;
  }
  return spec;
}

std::vector<FactType> parse_targets(const std::vector<std::string>& in) {
  std::vector<FactType> t;
  for (const auto& s : in) t.push_back(parse_fact_type(s));
  return t;
}

// Every multiset of orbit sizes summing to nu, largest first.
void partitions(unsigned rest, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(rest, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(rest - part, part, cur, out);
    cur.pop_back();
  }
}

Document wreath_document(unsigned n, const std::vector<unsigned>& orbits, bool sweep,
                         std::uint64_t max_power, unsigned threads) {
  Document doc = make_document("wreath");
  auto one = [&](const OrbitSetup& setup) {
    const std::uint64_t count = count_transitive(setup, threads);
    add_wreath(doc, setup, count, transitive_formula(setup), conjugation_orbits_on_T(setup));
  };
  if (!sweep) {
    if (n == 0) throw UsageError("--n is required unless --sweep is given");
    one(setup_from_orbit_sizes(n, orbits));
    return doc;
  }
  doc.body["max_power"] = max_power;
  doc.body["setups"] = Json::array();
  bool all_equal = true;
  bool all_single = true;
  for (unsigned nn = 1; nn <= 4; ++nn) {
    for (unsigned nu = 1; nu <= 4; ++nu) {
      if (sym_order_power(nn, nu) > max_power) continue;
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions(nu, nu, cur, parts);
      for (const auto& sizes : parts) one(setup_from_orbit_sizes(nn, sizes));
    }
  }
  for (const auto& s : doc.body["setups"]) {
    all_equal = all_equal && s["equal"].get<bool>();
    all_single = all_single && s["conjugation_orbits"].get<std::uint64_t>() == 1;
  }
  doc.body["all_equal"] = all_equal;
  doc.body["all_single_orbit"] = all_single;
  doc.summary.push_back(std::to_string(doc.body["setups"].size()) + " setups, formula " +
                        (all_equal ? "holds" : "FAILS") + ", conjugation " +
                        (all_single ? "transitive" : "NOT transitive"));
  return doc;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  Json j;
  j["schema"] = kSchema;
  j["error"] = {{"kind", kind}, {"message", message}};
  err << j.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypothesis-H statistics over finite fields", "hypoh"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--p", c.p, "Characteristic");
  app.add_option("--k", c.k, "Extension degree")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Seed for sampling")->envname("HYPOH_SEED");
  app.add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", c.out, "Write output to this file");
  app.add_flag("--deterministic", c.deterministic, "Omit the timestamp");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  CensusArgs ca;
  CLI::App* census = sub("census", "Factorization census of f_i(g(t)) over monic g of degree n");
  CLI::App* tcensus = sub("type-census", "Census against explicit factorization types");
  for (CLI::App* s : {census, tcensus}) {
    s->add_option("--n", ca.n, "Degree of g")->required();
    s->add_option("--f", ca.fs, "Polynomial f_i in X (repeatable)")->required();
    s->add_option("--sample", ca.samples, "Sample this many g instead of enumerating");
    s->add_flag("--raw", ca.raw, "Allow reducible f_i (no prediction)");
  }
  census->add_option("--target", ca.targets, "Factorization type per f_i, e.g. {1,1}");
  tcensus->add_option("--target", ca.targets, "Factorization type per f_i, e.g. {1,1}")->required();

  unsigned wn = 0;
  std::vector<unsigned> orbits{1};
  std::vector<std::string> targets;
  CLI::App* predict = sub("predict", "Density of a factorization-type tuple in the wreath model");
  predict->add_option("--n", wn, "Inner degree")->required();
  predict->add_option("--orbits", orbits, "Orbit sizes of sigma")->delimiter(',');
  predict->add_option("--target", targets, "Type per orbit (default: transitive)");

  bool sweep = false;
  std::uint64_t max_power = 1'000'000;
  CLI::App* wreath = sub("wreath", "Count column-transitive elements");
  wreath->add_option("--n", wn, "Inner degree");
  wreath->add_option("--orbits", orbits, "Orbit sizes of sigma")->delimiter(',');
  wreath->add_flag("--sweep", sweep, "All setups with n, nu <= 4 and (n!)^nu <= --max-power");
  wreath->add_option("--max-power", max_power, "Bound on (n!)^nu for --sweep");

  std::string h_text;
  bool symbolic = false;
  bool parity = false;
  unsigned deg_bound = 10;
  unsigned samples = 300;
  CLI::App* disc = sub("disc", "Discriminant classes");
  disc->add_option("--poly", h_text, "Polynomial (in t, or in X and T with --symbolic)");
  disc->add_flag("--symbolic", symbolic, "Discriminant over F_q[T]");
  disc->add_flag("--parity", parity, "Random check of the characteristic-2 parity law");
  disc->add_option("--deg-bound", deg_bound, "Degree bound for --parity");
  disc->add_option("--samples", samples, "Sample count for --parity");

  std::vector<std::string> classes;
  bool lemma = false;
  unsigned ln = 3;
  unsigned lr = 2;
  unsigned trials = 50;
  CLI::App* indep = sub("indep", "Square-class independence in F_q(T)");
  indep->add_option("--class", classes, "Element of F_q[T] (repeatable)");
  indep->add_flag("--lemma", lemma, "Check the alternating/symmetric lemma on S_n^r");
  indep->add_option("--n", ln, "n for --lemma");
  indep->add_option("--r", lr, "r for --lemma");
  indep->add_option("--trials", trials, "Trials for --lemma");

  CLI::App* swan = sub("swan", "g^8 + t^3 over F_2");
  swan->add_option("--deg-bound", deg_bound, "Largest deg g");

  std::vector<std::string> omega;
  unsigned corr_n = 2;
  CLI::App* corr = sub("corr", "Joint irreducibility of g - w over monic quadratics g");
  corr->add_option("--omega", omega, "Shift elements (repeatable)")->required();
  corr->add_option("--n", corr_n, "Degree of g (only 2)");

  CLI::App* info = sub("field-info", "Modulus and generator of F_q");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Document doc;
    if (census->parsed() || tcensus->parsed()) {
      const CensusSpec spec = census_spec(c, ca);
      const CensusReport rep = tcensus->parsed() ? type_census(spec) : run_census(spec);
      doc = make_document(tcensus->parsed() ? "type-census" : "census");
      add_census(doc, spec, rep);
    } else if (predict->parsed()) {
      const OrbitSetup setup = setup_from_orbit_sizes(wn, orbits);
      const std::vector<FactType> t = targets.empty() ? all_transitive_targets(setup) : parse_targets(targets);
      const Rational d = predict_density(setup, t);
      doc = make_document("predict");
      doc.body["n"] = wn;
      doc.body["orbits"] = orbits;
      Json tj = Json::array();
      for (const auto& x : t) tj.push_back(x.str());
      doc.body["targets"] = tj;
      doc.body["density"] = rational_str(d);
      doc.body["density_value"] = boost::rational_cast<double>(d);
      doc.summary.push_back("density " + rational_str(d));
    } else if (wreath->parsed()) {
      doc = wreath_document(wn, orbits, sweep, max_power, c.threads);
    } else if (disc->parsed()) {
      doc = make_document("disc");
      if (parity) {
        FieldPtr F = field_of(c);
        const ParityReport rep = parity_law_check(F, deg_bound, samples, c.seed);
        doc.body["field"] = field_json(*F);
        doc.body["deg_bound"] = rep.max_degree;
        doc.body["samples"] = rep.samples;
        doc.body["seed"] = std::to_string(rep.seed);
        doc.body["prng"] = kCensusPrng;
        doc.body["violations"] = rep.violations;
        doc.summary.push_back(std::to_string(rep.violations) + " violations in " +
                              std::to_string(rep.samples) + " samples");
      } else {
        if (h_text.empty()) throw UsageError("disc needs --poly or --parity");
        FieldPtr F = field_of(c);
        doc.body["field"] = field_json(*F);
        doc.body["h"] = h_text;
        if (symbolic) {
          const Poly d = sym_discriminant(RPoly::parse(F, h_text));
          doc.body["discriminant"] = format_poly(d, "T");
          doc.summary.push_back("Disc = " + format_poly(d, "T"));
          if (F->p() != 2) {
            const SquareClass cls = squarefree_part(d);
            doc.body["squarefree_part"] = format_poly(cls.rep, "T");
            doc.body["unit_nonsquare"] = cls.unit_nonsquare;
            doc.summary.push_back("square class [" + format_poly(cls.rep, "T") + "]" +
                                  (cls.unit_nonsquare ? " times a nonsquare unit" : ""));
          }
        } else {
          const Poly h = parse_poly(F, h_text);
          const FieldElem d = discriminant(h);
          doc.body["discriminant"] = format_elem(*F, d.code());
          if (F->p() == 2) {
            const BerlekampResult b = berlekamp_element(h);
            doc.body["berlekamp_element"] = format_elem(*F, b.cls.raw);
            doc.body["class"] = b.cls.value;
            doc.summary.push_back("A(h) = " + format_elem(*F, b.cls.raw) + ", class " +
                                  std::to_string(b.cls.value));
          } else {
            const bool sq = disc_class_odd(h);
            doc.body["square"] = sq;
            doc.body["class"] = sq ? "trivial" : "nontrivial";
            doc.summary.push_back("Disc = " + format_elem(*F, d.code()) + ", class " +
                                  (sq ? "trivial" : "nontrivial"));
          }
        }
      }
    } else if (indep->parsed()) {
      doc = make_document("indep");
      if (lemma) {
        const AltSymReport rep = check_lemma_alt_sym(ln, lr, trials, c.seed);
        doc.body["n"] = rep.n;
        doc.body["r"] = rep.r;
        doc.body["trials"] = rep.trials;
        doc.body["seed"] = std::to_string(c.seed);
        doc.body["hypothesis_held"] = rep.hypothesis_held;
        doc.body["counterexamples"] = rep.counterexamples;
        doc.summary.push_back(std::to_string(rep.counterexamples) + " counterexamples in " +
                              std::to_string(rep.hypothesis_held) + " qualifying trials");
      } else {
        if (classes.empty()) throw UsageError("indep needs --class or --lemma");
        FieldPtr F = field_of(c);
        std::vector<SquareClass> cls;
        Json reps = Json::array();
        for (const auto& s : classes) {
          cls.push_back(squarefree_part(parse_poly(F, s)));
          reps.push_back({{"input", s},
                          {"squarefree_part", format_poly(cls.back().rep, "T")},
                          {"unit_nonsquare", cls.back().unit_nonsquare}});
        }
        const bool ind = square_classes_independent(cls);
        doc.body["field"] = field_json(*F);
        doc.body["classes"] = reps;
        doc.body["independent"] = ind;
        doc.summary.push_back(std::string("independent: ") + (ind ? "true" : "false"));
      }
    } else if (swan->parsed()) {
      doc = make_document("swan");
      add_swan(doc, swan_mode(deg_bound, c.threads));
    } else if (corr->parsed()) {
      if (corr_n != 2) throw DomainError("corr: only n = 2 is supported");
      FieldPtr F = field_of(c);
      std::vector<Elem> om;
      for (const auto& s : omega) om.push_back(parse_elem(*F, s));
      doc = make_document("corr");
      add_correlation(doc, *F, correlation_mode(F, om));
    } else if (info->parsed()) {
      FieldPtr F = field_of(c);
      doc = make_document("field-info");
      doc.body["field"] = field_json(*F);
      doc.body["generator"] = format_poly(*make_field(F->p(), 1), F->digits(F->generator()), "x");
      doc.summary.push_back(F->describe());
    }
    const std::string text = render(doc, format_of(c.format), c.deterministic);
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      if (!f) throw DomainError("cannot open output file " + c.out);
      f << text;
    }
    return 0;
  } catch (const UsageError& e) {
    emit_error(err, "usage", e.what());
    return 2;
  } catch (const DomainError& e) {
    emit_error(err, "domain", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    emit_error(err, "usage", e.what());
    return 2;
  }
}

}  // namespace hypoh
