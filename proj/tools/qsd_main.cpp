// Command-line front end: every reproduction as a subcommand with mandatory
// seeding for stochastic runs, CSV/JSON output and companion plot scripts.
//
// Exit codes: 0 success, 2 flag/usage errors, 3 numerical failure.

#include <qsd/qsd.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::ordered_json;

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  int samples = 200;
  std::string out;
  std::string format = "csv";
  int threads = 0;

  int thread_count() const {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }

  std::uint64_t require_seed() const {
    if (!seed)
      throw std::invalid_argument("--seed is required for stochastic commands");
    return *seed;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_samples = true) {
  cmd->add_option("--seed", flags.seed, "master seed (required for stochastic commands)");
  if (with_samples) cmd->add_option("--samples", flags.samples, "samples per point");
  cmd->add_option("--out", flags.out, "output file (default: stdout)");
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", flags.threads, "worker threads (default: hardware)");
}

class Emitter {
 public:
  Emitter(std::string command, const CommonFlags& flags)
      : command_(std::move(command)), flags_(flags), start_(std::chrono::steady_clock::now()) {}

  void set_params(ordered_json params) { params_ = std::move(params); }
  void set_references(ordered_json refs) { references_ = std::move(refs); }

  // figure = true also writes <out>.plot.py when emitting CSV to a file
  void emit(const qsd::CsvTable& table, bool figure = false, const std::string& xcol = "",
            const std::string& ycol = "", const std::string& series = "") {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::string payload;
    if (flags_.format == "json") {
      const ordered_json report = qsd::make_report(
          command_, flags_.seed.value_or(0), params_, table, references_, wall);
      payload = report.dump(2) + "\n";
    } else {
      payload = table.to_string();
    }
    if (flags_.out.empty()) {
      std::cout << payload;
    } else {
      qsd::write_text_file(flags_.out, payload);
      if (figure && flags_.format == "csv")
        qsd::write_text_file(flags_.out + ".plot.py",
                             qsd::plot_script_xy(flags_.out, xcol, ycol, series, command_));
    }
  }

 private:
  std::string command_;
  const CommonFlags& flags_;
  ordered_json params_ = ordered_json::object();
  ordered_json references_ = ordered_json::object();
  std::chrono::steady_clock::time_point start_;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(std::stoi(part));
  }
  if (out.empty()) throw std::invalid_argument("empty list: " + text);
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(std::stod(part));
  }
  if (out.empty()) throw std::invalid_argument("empty list: " + text);
  return out;
}

struct Grid {
  double lo, hi, step;
};

Grid parse_grid(const std::string& text) {
  Grid g{};
  char c1 = 0, c2 = 0;
  std::stringstream ss(text);
  if (!(ss >> g.lo >> c1 >> g.hi >> c2 >> g.step) || c1 != ':' || c2 != ':' || g.step <= 0.0)
    throw std::invalid_argument("--grid expects LO:HI:STEP, got " + text);
  return g;
}

qsd::CsvTable estimate_rows_table(const std::vector<qsd::EstimateRow>& rows,
                                  const std::string& quantity) {
  qsd::CsvTable table({"quantity", "n", "k", "samples", "mean", "se", "reference", "abs_err"});
  for (const auto& r : rows)
    table.add_row({quantity, static_cast<long long>(r.n), static_cast<long long>(r.k),
                   static_cast<long long>(r.samples), r.mean, r.se, r.reference, r.abs_err});
  return table;
}

// --- fixed-state parser for `distance --fixed "A|B"` -------------------------

qsd::DensityMatrix parse_fixed_state(const std::string& spec, int n_hint) {
  using namespace qsd;
  if (spec == "maximally-mixed") {
    if (n_hint < 1) throw std::invalid_argument("maximally-mixed needs --n");
    return DensityMatrix::maximally_mixed(n_hint);
  }
  if (spec == "bell") {
    Vector v = Vector::Zero(4);
    v[0] = v[3] = 1.0 / std::sqrt(2.0);
    return PureState(std::move(v), BipartiteSplit{2, 2}).projector();
  }
  if (spec == "uniform-superposition") {
    if (n_hint < 1) throw std::invalid_argument("uniform-superposition needs --n");
    Vector v = Vector::Constant(n_hint, 1.0 / std::sqrt(static_cast<double>(n_hint)));
    return PureState(std::move(v)).projector();
  }
  if (spec.rfind("basis(", 0) == 0 && spec.back() == ')') {
    if (n_hint < 1) throw std::invalid_argument("basis(i) needs --n");
    const int i = std::stoi(spec.substr(6, spec.size() - 7));
    return DensityMatrix::basis_state(n_hint, i);
  }
  if (spec.rfind("diag(", 0) == 0 && spec.back() == ')') {
    const std::vector<double> d = parse_double_list(spec.substr(5, spec.size() - 6));
    Matrix m = Matrix::Zero(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return DensityMatrix(std::move(m));
  }
  throw std::invalid_argument("unknown fixed state '" + spec + "'");
}

double fixed_metric_value(const std::string& metric, const qsd::DensityMatrix& a,
                          const qsd::DensityMatrix& b) {
  using namespace qsd;
  if (metric == "tr") return trace_distance(a, b);
  if (metric == "hs") return hs_distance(a, b);
  if (metric == "hsn") return hs_norm_distance(a, b);
  if (metric == "inf") return inf_distance(a, b);
  if (metric == "bures") return bures_distance(a, b);
  if (metric == "hellinger") return hellinger_distance(a, b);
  if (metric == "rootf") return root_fidelity(a, b);
  if (metric == "fidelity") return fidelity(a, b);
  if (metric == "qjsd") return qjsd(a, b);
  if (metric == "transmission") return transmission_distance(a, b);
  if (metric == "entropic") return entropic_distance(a, b);
  if (metric == "kl") return relative_entropy(a, b);
  if (metric == "chernoff") return chernoff_information(a, b).q;
  throw std::invalid_argument("unknown metric '" + metric + "'");
}

std::string metric_to_quantity(const std::string& metric, bool star) {
  if (metric == "tr") return star ? "tr-star" : "tr-pair";
  if (metric == "hs") return "hs-pair";
  if (metric == "hsn") return star ? "hsn-star-scaled" : "hsn-pair-scaled";
  if (metric == "inf") return "inf-pair";
  if (metric == "bures") return star ? "bures-star" : "bures-pair";
  if (metric == "hellinger") return "hellinger-pair";
  if (metric == "rootf") return star ? "rootf-star" : "rootf-pair";
  if (metric == "qjsd") return "qjsd-pair";
  if (metric == "transmission") return "transmission-pair";
  if (metric == "entropic") return "entropic-pair";
  if (metric == "kl") return star ? "kl-to-star" : "kl-pair";
  if (metric == "chernoff") return "chernoff-pair";
  throw std::invalid_argument("unknown metric '" + metric + "'");
}

// --- subcommand bodies --------------------------------------------------------

void run_pdf(const CommonFlags& flags, const std::string& law_str, double c,
             const std::string& grid_str) {
  using namespace qsd;
  LimitLaw law = [&] {
    if (law_str == "mp") return LimitLaw::marchenko_pastur(c);
    if (law_str == "smp") return LimitLaw::symmetrized_mp(c);
    if (law_str == "fc") return LimitLaw::fuss_catalan2();
    if (law_str == "semicircle") return LimitLaw::semicircle(0.0, 2.0);
    return LimitLaw::aubrun(c);
  }();
  const Grid grid = parse_grid(grid_str);
  CsvTable table({"x", "density"});
  for (double x = grid.lo; x <= grid.hi + grid.step / 2; x += grid.step)
    table.add_row({x, law.pdf(x)});
  Emitter emitter("pdf", flags);
  emitter.set_params({{"law", law_str}, {"c", c}, {"grid", grid_str}});
  emitter.set_references({{"atom0", law.atom0()},
                          {"support_lo", law.lo()},
                          {"support_hi", law.hi()},
                          {"inner_edge", law.inner_edge()}});
  emitter.emit(table, true, "x", "density");
}

void run_constants(const CommonFlags& flags, const std::string& name) {
  using namespace qsd;
  if (!name.empty()) {
    const ConstantEntry* e = find_constant(name);
    if (!e) throw std::invalid_argument("unknown constant '" + name + "'");
    std::ostringstream line;
    line << e->expression << " = " << format_number(e->value) << "\n";
    if (flags.out.empty())
      std::cout << line.str();
    else
      write_text_file(flags.out, line.str());
    return;
  }
  CsvTable table({"name", "expression", "value"});
  for (const ConstantEntry& e : constants_registry())
    table.add_row({e.name, e.expression, e.value});
  Emitter emitter("constants", flags);
  emitter.emit(table);
}

void run_sample(const CommonFlags& flags, const std::string& ensemble, int n, int k, double s) {
  using namespace qsd;
  const std::uint64_t seed = flags.require_seed();
  CsvTable table({"sample", "index", "value", "rescaled"});
  for (int i = 0; i < flags.samples; ++i) {
    RandomStream stream(seed, static_cast<std::uint64_t>(i));
    auto add = [&](int idx, double value, double rescaled) {
      table.add_row({static_cast<long long>(i), static_cast<long long>(idx), value, rescaled});
    };
    if (ensemble == "hs" || ensemble == "induced") {
      const int kk = ensemble == "hs" ? n : k;
      const Spectrum spec = spectrum_of(sample_induced(n, kk, stream));
      for (std::size_t j = 0; j < spec.values.size(); ++j)
        add(static_cast<int>(j), spec.values[j], kk * spec.values[j]);
    } else if (ensemble == "pure-c" || ensemble == "pure-r") {
      const Field f = ensemble == "pure-c" ? Field::complex_field : Field::real_field;
      const PureState psi = sample_haar_pure(n, f, stream);
      for (int j = 0; j < n; ++j) {
        const double q = std::norm(psi.vector()[j]);
        add(j, q, n * q);
      }
    } else if (ensemble == "dirichlet") {
      const ProbabilityVector q = sample_dirichlet(n, s, stream);
      for (int j = 0; j < n; ++j) add(j, q[j], n * q[j]);
    } else if (ensemble == "ball") {
      const RealVector x = sample_ball(n, stream);
      for (int j = 0; j < n; ++j) add(j, x[j], x[j]);
    } else {
      throw std::invalid_argument("unknown ensemble '" + ensemble + "'");
    }
  }
  Emitter emitter("sample", flags);
  emitter.set_params({{"ensemble", ensemble}, {"n", n}, {"k", k}, {"s", s}});
  emitter.emit(table);
}

void run_distance(const CommonFlags& flags, const std::string& metric, int n, int k,
                  const std::string& fixed) {
  using namespace qsd;
  Emitter emitter("distance", flags);
  if (!fixed.empty()) {
    const auto bar = fixed.find('|');
    if (bar == std::string::npos)
      throw std::invalid_argument("--fixed expects \"stateA|stateB\"");
    const DensityMatrix a = parse_fixed_state(fixed.substr(0, bar), n);
    const DensityMatrix b = parse_fixed_state(fixed.substr(bar + 1), n);
    const DistanceReport report{metric, fixed_metric_value(metric, a, b),
                                fixed.substr(0, bar), fixed.substr(bar + 1)};
    CsvTable table({"metric", "lhs", "rhs", "value"});
    table.add_row({report.metric, report.lhs, report.rhs, report.value});
    emitter.set_params({{"metric", metric}, {"fixed", fixed}, {"n", n}});
    emitter.emit(table);
    return;
  }
  ExperimentPlan plan;
  plan.quantity = metric_to_quantity(metric, false);
  plan.sweep = {{n, k > 0 ? k : n}};
  plan.samples = flags.samples;
  plan.master_seed = flags.require_seed();
  const auto rows = run_plan(plan, flags.thread_count());
  emitter.set_params({{"metric", metric}, {"n", n}, {"k", plan.sweep[0].k}});
  emitter.emit(estimate_rows_table(rows, plan.quantity));
}

void run_table1(const CommonFlags& flags, int n) {
  using namespace qsd;
  const auto rows = table1(n, flags.samples, flags.require_seed(), flags.thread_count());
  CsvTable table({"metric", "star_mean", "star_se", "star_ref", "pair_mean", "pair_se",
                  "pair_ref", "pure_value", "pure_ref"});
  for (const auto& r : rows)
    table.add_row({r.metric, r.star_mean, r.star_se, r.star_ref, r.pair_mean, r.pair_se,
                   r.pair_ref, r.pure_value, r.pure_ref});
  Emitter emitter("table1", flags);
  emitter.set_params({{"n", n}, {"samples", flags.samples}});
  emitter.emit(table);
}

void run_converge(const CommonFlags& flags, const std::string& metric,
                  const std::string& n_list) {
  using namespace qsd;
  ExperimentPlan plan;
  plan.quantity = metric_to_quantity(metric, false);
  for (int n : parse_int_list(n_list)) plan.sweep.push_back({n, n});
  plan.samples = flags.samples;
  plan.master_seed = flags.require_seed();
  const auto rows = run_plan(plan, flags.thread_count());
  Emitter emitter("converge", flags);
  emitter.set_params({{"metric", metric}, {"n_list", n_list}});
  emitter.emit(estimate_rows_table(rows, plan.quantity), true, "n", "mean");
}

void run_cdep(const CommonFlags& flags, const std::string& metric, const std::string& c_list,
              int n) {
  using namespace qsd;
  const std::uint64_t seed = flags.require_seed();
  const bool is_tr = metric == "tr";
  CsvTable table({"c", "k", "pair_mean", "pair_se", "pair_asym", "pair_rate", "star_mean",
                  "star_se", "star_asym", "star_rate"});
  const std::vector<double> cs = parse_double_list(c_list);
  for (std::size_t idx = 0; idx < cs.size(); ++idx) {
    const double c = cs[idx];
    const int k = std::max(1, static_cast<int>(std::lround(c * n)));
    const double c_eff = static_cast<double>(k) / n;
    ExperimentPlan plan;
    plan.quantity = is_tr ? "tr-pair" : "hsn-pair-scaled";
    plan.sweep = {{n, k}};
    plan.samples = flags.samples;
    plan.master_seed = seed + idx;
    const auto pair_rows = run_plan(plan, flags.thread_count());
    plan.quantity = is_tr ? "tr-star" : "hsn-star-scaled";
    const auto star_rows = run_plan(plan, flags.thread_count());

    double pair_asym, star_asym, pair_rate, star_rate;
    if (is_tr) {
      const LimitLaw smp = LimitLaw::symmetrized_mp(c_eff);
      const LimitLaw mp = LimitLaw::marchenko_pastur(c_eff);
      pair_asym = smp.expectation([](double y) { return std::abs(y); }, {0.0}) / (2.0 * c_eff);
      star_asym =
          mp.expectation([c_eff](double x) { return std::abs(x - c_eff); }, {c_eff}) /
          (2.0 * c_eff);
      pair_rate = constant("cdep-trace-pair") / std::sqrt(c_eff);
      star_rate = constant("cdep-trace-star") / std::sqrt(c_eff);
    } else {
      pair_asym = std::sqrt(2.0 / c_eff);
      star_asym = std::sqrt(1.0 / c_eff);
      pair_rate = pair_asym;
      star_rate = star_asym;
    }
    table.add_row({c_eff, static_cast<long long>(k), pair_rows[0].mean, pair_rows[0].se,
                   pair_asym, pair_rate, star_rows[0].mean, star_rows[0].se, star_asym,
                   star_rate});
  }
  Emitter emitter("cdep", flags);
  emitter.set_params({{"metric", metric}, {"c_list", c_list}, {"n", n}});
  emitter.emit(table, true, "c", "pair_mean");
}

void run_tail(const CommonFlags& flags, double eps, const std::string& n_list) {
  using namespace qsd;
  const auto rows = concentration_tail(parse_int_list(n_list), eps, flags.samples,
                                       flags.require_seed(), flags.thread_count());
  CsvTable table({"n", "exceed", "se", "samples"});
  for (const auto& r : rows)
    table.add_row({static_cast<long long>(r.n), r.exceed, r.se,
                   static_cast<long long>(r.samples)});
  Emitter emitter("tail", flags);
  emitter.set_params({{"eps", eps}, {"n_list", n_list}});
  emitter.emit(table);
}

void run_kicked_top(const CommonFlags& flags, const std::string& mode, double j1, double j2,
                    double kick, double eps, int steps, int realizations) {
  using namespace qsd;
  KickedTopConfig cfg;
  cfg.j1 = j1;
  cfg.j2 = j2;
  cfg.kick = kick;
  cfg.eps = eps;
  cfg.steps = steps;
  Emitter emitter("kicked-top " + mode, flags);
  if (mode == "relax") {
    const auto series = evolve_reduced_pair(cfg);
    const double dtilde = constant("trace-generic");
    CsvTable table({"t", "dtr", "dtilde"});
    for (const auto& p : series)
      table.add_row({static_cast<long long>(p.t), p.trace_distance, dtilde});
    emitter.set_params({{"j1", j1}, {"j2", j2}, {"kick", kick}, {"eps", eps}, {"steps", steps}});
    emitter.set_references({{"dtilde", dtilde}});
    emitter.emit(table, true, "t", "dtr");
    return;
  }
  RandomStream stream(flags.require_seed(), 0);
  const Spectrum spec = helstrom_spectrum(cfg, realizations, steps, stream, flags.thread_count());
  const double c = cfg.c();
  const LimitLaw law = LimitLaw::symmetrized_mp(c);
  const double ks = ks_distance_to_law(spec.values, law);

  Histogram hist(-law.hi() * 1.05, law.hi() * 1.05, 80);
  for (double v : spec.values) hist.add(v);
  CsvTable table({"series", "x", "y"});
  for (std::size_t b = 0; b < hist.counts.size(); ++b)
    table.add_row({"empirical", hist.bin_center(b), hist.density(b)});
  for (double x = -law.hi(); x <= law.hi(); x += law.hi() / 200.0)
    table.add_row({"smp", x, law.pdf(x)});
  emitter.set_params({{"j1", j1},
                      {"j2", j2},
                      {"kick", kick},
                      {"eps", eps},
                      {"steps", steps},
                      {"realizations", realizations}});
  emitter.set_references({{"c", c}, {"ks_distance", ks}, {"atom0", law.atom0()}});
  emitter.emit(table, true, "x", "y", "series");
}

void run_coherence(const CommonFlags& flags, const std::string& kind, int n,
                   const std::string& field_str, const std::string& purity) {
  using namespace qsd;
  const Field field = field_str == "r" ? Field::real_field : Field::complex_field;
  Emitter emitter("coherence", flags);
  emitter.set_params({{"kind", kind}, {"n", n}, {"field", field_str}, {"purity", purity}});
  if (kind == "offdiag") {
    RandomStream stream(flags.require_seed(), 1);
    const OffdiagHistogram hist = offdiag_histogram(field, n, flags.samples, stream);
    const auto cdf = field == Field::complex_field ? offdiag_cdf_complex : offdiag_cdf_real;
    const auto pdfv = field == Field::complex_field ? offdiag_density_complex : offdiag_density_real;
    const double ks = ks_distance(hist.pooled, cdf);
    CsvTable table({"series", "x", "y"});
    for (std::size_t b = 0; b < hist.hist.counts.size(); ++b)
      table.add_row({"empirical", hist.hist.bin_center(b), hist.hist.density(b)});
    for (double x = 0.0; x <= hist.hist.hi; x += hist.hist.hi / 200.0)
      table.add_row({"limit", x, pdfv(x)});
    emitter.set_references({{"ks_distance", ks}, {"mean", hist.mean}});
    emitter.emit(table, true, "x", "y", "series");
    return;
  }
  std::string quantity;
  if (kind == "rel-ent")
    quantity = purity == "pure" ? (field == Field::complex_field ? "coh-deficit-pure-c"
                                                                 : "coh-deficit-pure-r")
                                : "coh-mixed";
  else if (kind == "l1")
    quantity = purity == "pure"
                   ? (field == Field::complex_field ? "cl1-pure-c" : "cl1-pure-r")
                   : (field == Field::complex_field ? "cl1-mixed-c" : "cl1-mixed-r");
  else
    throw std::invalid_argument("unknown coherence kind '" + kind + "'");
  ExperimentPlan plan;
  plan.quantity = quantity;
  plan.sweep = {{n, n}};
  plan.samples = flags.samples;
  plan.master_seed = flags.require_seed();
  emitter.emit(estimate_rows_table(run_plan(plan, flags.thread_count()), quantity));
}

void run_entangle(const CommonFlags& flags, const std::string& kind, int na, int nb) {
  using namespace qsd;
  std::string quantity;
  PointSpec pt{na, nb};
  if (kind == "negativity") quantity = "negativity";
  else if (kind == "fraction") quantity = "neg-fraction";
  else if (kind == "gconc") { quantity = "g-concurrence"; pt = {na, na}; }
  else if (kind == "pure-neg") { quantity = "pure-neg-rate"; pt = {na, na}; }
  else throw std::invalid_argument("unknown entangle kind '" + kind + "'");
  ExperimentPlan plan;
  plan.quantity = quantity;
  plan.sweep = {pt};
  plan.samples = flags.samples;
  plan.master_seed = flags.require_seed();
  Emitter emitter("entangle", flags);
  emitter.set_params({{"kind", kind}, {"na", na}, {"nb", nb}});
  emitter.emit(estimate_rows_table(run_plan(plan, flags.thread_count()), quantity));
}

void run_ball(const CommonFlags& flags, const std::string& n_list) {
  using namespace qsd;
  const auto rows = ball_table(parse_int_list(n_list), flags.samples, flags.require_seed(),
                               flags.thread_count());
  CsvTable table({"n", "norm", "mean", "se", "reference", "printed"});
  for (const auto& r : rows)
    table.add_row({static_cast<long long>(r.n), r.norm, r.mean, r.se, r.reference, r.printed});
  Emitter emitter("ball", flags);
  emitter.set_params({{"n_list", n_list}});
  emitter.emit(table);
}

void run_classical(const CommonFlags& flags, const std::string& measure,
                   const std::string& quantity, int n) {
  using namespace qsd;
  const std::string m = measure == "flat" ? "flat" : "stat";
  const std::string q = quantity == "l1" ? "l1" : "bhatt";
  Emitter emitter("classical", flags);
  emitter.set_params({{"measure", measure}, {"quantity", quantity}, {"n", n}});
  CsvTable table({"quantity", "n", "k", "samples", "mean", "se", "reference", "abs_err"});
  for (const std::string variant : {"pair", "star"}) {
    ExperimentPlan plan;
    plan.quantity = "classical-" + q + "-" + m + "-" + variant;
    plan.sweep = {{n, n}};
    plan.samples = flags.samples;
    plan.master_seed = flags.require_seed();
    for (const auto& r : run_plan(plan, flags.thread_count()))
      table.add_row({plan.quantity, static_cast<long long>(r.n), static_cast<long long>(r.k),
                     static_cast<long long>(r.samples), r.mean, r.se, r.reference, r.abs_err});
  }
  emitter.emit(table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random-state distinguishability toolkit"};
  app.require_subcommand(1);

  // pdf
  CommonFlags pdf_flags;
  std::string pdf_law = "mp", pdf_grid = "0:4:0.01";
  double pdf_c = 1.0;
  auto* pdf_cmd = app.add_subcommand("pdf", "closed-form limit-law density on a grid");
  pdf_cmd->add_option("--law", pdf_law, "law")->required()
      ->check(CLI::IsMember({"mp", "smp", "fc", "semicircle", "aubrun"}));
  pdf_cmd->add_option("--c", pdf_c, "rectangularity parameter");
  pdf_cmd->add_option("--grid", pdf_grid, "LO:HI:STEP")->required();
  add_common(pdf_cmd, pdf_flags, false);

  // constants
  CommonFlags const_flags;
  std::string const_name;
  auto* const_cmd = app.add_subcommand("constants", "asymptotic constants registry");
  const_cmd->add_option("--name", const_name, "single constant to print");
  add_common(const_cmd, const_flags, false);

  // sample
  CommonFlags sample_flags;
  std::string sample_ensemble;
  int sample_n = 16, sample_k = 0;
  double sample_s = 1.0;
  auto* sample_cmd = app.add_subcommand("sample", "draw spectra / vectors from an ensemble");
  sample_cmd->add_option("--ensemble", sample_ensemble, "ensemble")->required()
      ->check(CLI::IsMember({"hs", "induced", "pure-c", "pure-r", "dirichlet", "ball"}));
  sample_cmd->add_option("--n", sample_n, "dimension")->required();
  sample_cmd->add_option("--k", sample_k, "environment dimension (induced)");
  sample_cmd->add_option("--s", sample_s, "Dirichlet index");
  add_common(sample_cmd, sample_flags);

  // distance
  CommonFlags dist_flags;
  std::string dist_metric, dist_fixed;
  int dist_n = 100, dist_k = 0;
  auto* dist_cmd = app.add_subcommand("distance", "Monte Carlo distance vs reference");
  dist_cmd->add_option("--metric", dist_metric, "metric")->required();
  dist_cmd->add_option("--n", dist_n, "dimension");
  dist_cmd->add_option("--k", dist_k, "environment dimension");
  dist_cmd->add_option("--fixed", dist_fixed, "deterministic input pair \"A|B\"");
  add_common(dist_cmd, dist_flags);

  // table1
  CommonFlags t1_flags;
  int t1_n = 100;
  auto* t1_cmd = app.add_subcommand("table1", "full summary distance table");
  t1_cmd->add_option("--n", t1_n, "dimension");
  add_common(t1_cmd, t1_flags);

  // converge
  CommonFlags conv_flags;
  std::string conv_metric = "tr", conv_nlist = "2,4,8,16,32,64,128";
  auto* conv_cmd = app.add_subcommand("converge", "dimension dependence of a distance");
  conv_cmd->add_option("--metric", conv_metric, "tr or bures")
      ->check(CLI::IsMember({"tr", "bures"}));
  conv_cmd->add_option("--n-list", conv_nlist, "comma-separated dimensions");
  add_common(conv_cmd, conv_flags);

  // cdep
  CommonFlags cdep_flags;
  std::string cdep_metric = "tr", cdep_clist = "1,2,4,8,16";
  int cdep_n = 64;
  auto* cdep_cmd = app.add_subcommand("cdep", "rectangularity dependence of a distance");
  cdep_cmd->add_option("--metric", cdep_metric, "tr or hs")
      ->check(CLI::IsMember({"tr", "hs"}));
  cdep_cmd->add_option("--c-list", cdep_clist, "comma-separated c values");
  cdep_cmd->add_option("--n", cdep_n, "system dimension");
  add_common(cdep_cmd, cdep_flags);

  // tail
  CommonFlags tail_flags;
  std::string tail_nlist = "8,16,32,64";
  double tail_eps = 0.05;
  auto* tail_cmd = app.add_subcommand("tail", "concentration exceedance table");
  tail_cmd->add_option("--eps", tail_eps, "deviation threshold")->required();
  tail_cmd->add_option("--n-list", tail_nlist, "comma-separated dimensions");
  add_common(tail_cmd, tail_flags);

  // kicked-top
  CommonFlags top_flags;
  std::string top_mode;
  double top_j1 = 49.5, top_j2 = 49.5, top_kick = 6.0, top_eps = 0.01;
  int top_steps = 200, top_reals = 100;
  auto* top_cmd = app.add_subcommand("kicked-top", "coupled kicked tops");
  top_cmd->add_option("mode", top_mode, "spectrum or relax")->required()
      ->check(CLI::IsMember({"spectrum", "relax"}));
  top_cmd->add_option("--j1", top_j1, "first spin");
  top_cmd->add_option("--j2", top_j2, "second spin");
  top_cmd->add_option("--kick", top_kick, "kicking strength");
  top_cmd->add_option("--eps", top_eps, "coupling");
  top_cmd->add_option("--steps", top_steps, "steps (harvest time for spectrum)");
  top_cmd->add_option("--realizations", top_reals, "realizations (spectrum)");
  add_common(top_cmd, top_flags, false);

  // coherence
  CommonFlags coh_flags;
  std::string coh_kind, coh_field = "c", coh_purity = "pure";
  int coh_n = 128;
  auto* coh_cmd = app.add_subcommand("coherence", "coherence functionals of random states");
  coh_cmd->add_option("--kind", coh_kind, "rel-ent, l1 or offdiag")->required()
      ->check(CLI::IsMember({"rel-ent", "l1", "offdiag"}));
  coh_cmd->add_option("--n", coh_n, "dimension");
  coh_cmd->add_option("--field", coh_field, "r or c")->check(CLI::IsMember({"r", "c"}));
  coh_cmd->add_option("--purity", coh_purity, "pure or mixed")
      ->check(CLI::IsMember({"pure", "mixed"}));
  add_common(coh_cmd, coh_flags);

  // entangle
  CommonFlags ent_flags;
  std::string ent_kind;
  int ent_na = 10, ent_nb = 10;
  auto* ent_cmd = app.add_subcommand("entangle", "entanglement of random states");
  ent_cmd->add_option("--kind", ent_kind, "negativity, fraction, gconc or pure-neg")
      ->required()
      ->check(CLI::IsMember({"negativity", "fraction", "gconc", "pure-neg"}));
  ent_cmd->add_option("--na", ent_na, "first subsystem dimension");
  ent_cmd->add_option("--nb", ent_nb, "second subsystem dimension");
  add_common(ent_cmd, ent_flags);

  // ball
  CommonFlags ball_flags;
  std::string ball_nlist = "1,2,3";
  auto* ball_cmd = app.add_subcommand("ball", "mean distances in the unit n-ball");
  ball_cmd->add_option("--n-list", ball_nlist, "comma-separated dimensions");
  add_common(ball_cmd, ball_flags);

  // classical
  CommonFlags cls_flags;
  std::string cls_measure, cls_quantity;
  int cls_n = 256;
  auto* cls_cmd = app.add_subcommand("classical", "classical probability-vector distances");
  cls_cmd->add_option("--measure", cls_measure, "flat or statistical")->required()
      ->check(CLI::IsMember({"flat", "statistical"}));
  cls_cmd->add_option("--quantity", cls_quantity, "l1 or bhatt")->required()
      ->check(CLI::IsMember({"l1", "bhatt"}));
  cls_cmd->add_option("--n", cls_n, "dimension");
  add_common(cls_cmd, cls_flags);

  try {
    app.parse(argc, argv);
    if (pdf_cmd->parsed()) run_pdf(pdf_flags, pdf_law, pdf_c, pdf_grid);
    if (const_cmd->parsed()) run_constants(const_flags, const_name);
    if (sample_cmd->parsed())
      run_sample(sample_flags, sample_ensemble, sample_n, sample_k, sample_s);
    if (dist_cmd->parsed()) run_distance(dist_flags, dist_metric, dist_n, dist_k, dist_fixed);
    if (t1_cmd->parsed()) run_table1(t1_flags, t1_n);
    if (conv_cmd->parsed()) run_converge(conv_flags, conv_metric, conv_nlist);
    if (cdep_cmd->parsed()) run_cdep(cdep_flags, cdep_metric, cdep_clist, cdep_n);
    if (tail_cmd->parsed()) run_tail(tail_flags, tail_eps, tail_nlist);
    if (top_cmd->parsed())
      run_kicked_top(top_flags, top_mode, top_j1, top_j2, top_kick, top_eps, top_steps,
                     top_reals);
    if (coh_cmd->parsed()) run_coherence(coh_flags, coh_kind, coh_n, coh_field, coh_purity);
    if (ent_cmd->parsed()) run_entangle(ent_flags, ent_kind, ent_na, ent_nb);
    if (ball_cmd->parsed()) run_ball(ball_flags, ball_nlist);
    if (cls_cmd->parsed()) run_classical(cls_flags, cls_measure, cls_quantity, cls_n);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const qsd::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
