#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lowlying/arith.hpp"
#include "lowlying/dimension.hpp"
#include "lowlying/geodesics.hpp"
#include "lowlying/modular.hpp"
#include "lowlying/quad_forms.hpp"
#include "lowlying/sieve_lab.hpp"
#include "lowlying/thin_semigroup.hpp"

namespace lowlying::cli {

namespace {

namespace sg = lowlying::semigroup;

sg::EnumerationLimits limits_of(const ExperimentConfig& cfg) { return {cfg.max_nodes}; }

void add_alphabet(CLI::App& app, ExperimentConfig& cfg) {
  app.add_option("--alphabet,-A", cfg.alphabet, "largest partial quotient")->check(CLI::PositiveNumber);
}

void add_norm(CLI::App& app, ExperimentConfig& cfg) {
  app.add_option("--norm,-N", cfg.norm, "Frobenius norm bound")->check(CLI::PositiveNumber);
}

void add_limits(CLI::App& app, ExperimentConfig& cfg) {
  app.add_option("--max-nodes", cfg.max_nodes, "enumeration cap on visited words");
}

std::string forms_join(const std::vector<forms::IndefiniteForm>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ' ';
    out += f.to_string();
  }
  return out;
}

sieve::SiftingSequence sifting_source(const ExperimentConfig& cfg) {
  if (cfg.source == "ball") return sieve::sift_ball(cfg.alphabet, cfg.norm, {}, limits_of(cfg));
  if (cfg.source == "pi") {
    auto xi = sg::build_fixed_length_ball(cfg.alphabet, cfg.X, "Xi", limits_of(cfg));
    auto omega = sg::build_fixed_length_ball(cfg.alphabet, cfg.Z, "Omega", limits_of(cfg));
    auto aleph = sg::aleph_construct(cfg.Y, cfg.modulus, limits_of(cfg));
    auto pi = sg::build_Pi(xi.members, aleph.members, omega.members);
    return sieve::sift_values(pi);
  }
  throw ConfigError("unknown source " + cfg.source + " (expected ball or pi)");
}

void add_source(CLI::App& app, ExperimentConfig& cfg) {
  app.add_option("--source", cfg.source, "ball or pi")->check(CLI::IsMember({"ball", "pi"}));
  app.add_option("--x", cfg.X, "norm bound for Xi (source=pi)");
  app.add_option("--y", cfg.Y, "norm bound for Aleph (source=pi)");
  app.add_option("--z", cfg.Z, "norm bound for Omega (source=pi)");
  cfg.modulus = 2;
  app.add_option("--modulus", cfg.modulus, "Aleph modulus (source=pi)");
}

// ---------------------------------------------------------------------------

Artifact cmd_enumerate(const ExperimentConfig& cfg) {
  auto parity = cfg.parity == "any" ? sg::Parity::Any : sg::Parity::Even;
  std::ostringstream out;
  std::uint64_t count = 0;
  Table table({"word", "a", "b", "c", "d", "trace", "norm_sq"});
  bool jsonl = cfg.format == "jsonl";
  Json rows = Json::array();
  sg::visit_ball(cfg.alphabet, sg::NormBound::closed(cfg.norm), parity,
                 [&](const std::vector<std::int64_t>& digits, const sg::Mat64& m) {
                   ++count;
                   std::string word = cf::Word(digits).to_string();
                   if (jsonl || cfg.format == "json") {
                     Json rec = Json::object();
                     rec["word"] = word;
                     rec["matrix"] = Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})});
                     rec["trace"] = m.trace();
                     rec["normSq"] = narrow64(m.norm_sq());
                     if (jsonl) out << rec.dump() << '\n';
                     else rows.push_back(std::move(rec));
                   } else {
                     table.add_row({word, cell(m.a), cell(m.b), cell(m.c), cell(m.d), cell(m.trace()),
                                    cell(m.norm_sq())});
                   }
                 },
                 limits_of(cfg));
  Json summary = {{"alphabet", cfg.alphabet}, {"norm", cfg.norm}, {"parity", cfg.parity}, {"count", count}};
  if (jsonl) return {out.str(), summary};
  if (cfg.format == "json") {
    Json doc = {{"summary", summary}, {"rows", rows}};
    return {doc.dump(2) + "\n", summary};
  }
  return render(table, cfg.format, summary);
}

Artifact cmd_trace_fiber(const ExperimentConfig& cfg) {
  auto words = sg::trace_fiber_words(cfg.alphabet, cfg.trace, limits_of(cfg));
  std::map<cf::Word, std::uint64_t> orbits;
  for (const auto& w : words) ++orbits[w.canonical_rotation()];
  Table table({"alphabet", "trace", "class_word", "orbit_size"});
  for (const auto& [w, n] : orbits) table.add_row({cell(cfg.alphabet), cell(cfg.trace), w.to_string(), cell(n)});
  Json summary = {{"alphabet", cfg.alphabet},
                  {"trace", cfg.trace},
                  {"multiplicity", words.size()},
                  {"classes", orbits.size()}};
  return render(table, cfg.format, summary);
}

Artifact cmd_hensley_fit(const ExperimentConfig& cfg) {
  auto grid = sg::geometric_grid(cfg.norm_min, cfg.norm_max, cfg.points);
  auto fit = sg::hensley_exponent(cfg.alphabet, grid, limits_of(cfg));
  Table table({"alphabet", "N", "count", "log_N", "log_count"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    table.add_row({cell(cfg.alphabet), cell(grid[i]), cell(fit.counts[i]), cell(std::log(grid[i])),
                   cell(std::log(static_cast<double>(fit.counts[i])))});
  }
  Json summary = {{"alphabet", cfg.alphabet},
                  {"slope", fit.slope},
                  {"intercept", fit.intercept},
                  {"residual", fit.residual}};
  return render(table, cfg.format, summary);
}

Artifact cmd_dimension(const ExperimentConfig& cfg) {
  std::vector<std::int64_t> alphabets = cfg.alphabets.empty() ? std::vector<std::int64_t>{cfg.alphabet} : cfg.alphabets;
  Table table({"alphabet", "depth", "lower", "upper", "asymptotic"});
  Json estimates = Json::array();
  for (auto a : alphabets) {
    int depth = cfg.depth > 0 ? cfg.depth : dimension::max_depth(a);
    auto e = dimension::estimate(a, depth, cfg.tol);
    table.add_row({cell(a), cell(depth), cell(e.lower), cell(e.upper), cell(dimension::asymptotic(a))});
    estimates.push_back({{"alphabet", a},
                         {"depth", depth},
                         {"ratio_lower", e.ratio_lower},
                         {"ratio_upper", e.ratio_upper},
                         {"distortion_lower", e.distortion_lower},
                         {"distortion_upper", e.distortion_upper}});
  }
  return render(table, cfg.format, {{"tolerance", cfg.tol}, {"estimates", estimates}});
}

Artifact cmd_densities(const ExperimentConfig& cfg) {
  arith::require_squarefree(cfg.modulus, "modulus");
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 2; d <= cfg.modulus; ++d) {
    if (cfg.modulus % d == 0) divisors.push_back(d);
  }
  Table table({"q", "beta", "sl2_order", "sqrt4_count", "sqrt4_formula", "beta_bruteforce", "rho_plus2",
               "rho_minus2"});
  for (auto d : divisors) {
    std::string brute, plus, minus;
    if (arith::is_prime(d) && d <= modular::kDefaultCap) {
      brute = to_string(modular::beta_bruteforce(d));
      plus = to_string(modular::rho_t_bruteforce(d, 2));
      minus = to_string(modular::rho_t_bruteforce(d, -2));
    }
    table.add_row({cell(d), cell(modular::beta(d)), cell(modular::sl2_order(d)), cell(modular::sqrt4_count(d)),
                   cell(modular::sqrt4_formula(d)), brute, plus, minus});
  }
  Json summary = {{"modulus", cfg.modulus}, {"beta", to_string(modular::beta(cfg.modulus))}};
  return render(table, cfg.format, summary);
}

Artifact cmd_expsum(const ExperimentConfig& cfg) {
  if (cfg.kind == "kloosterman") {
    std::int64_t p = cfg.prime;
    Table table({"a", "b", "value", "weil_bound"});
    double bound = 2.0 * std::sqrt(static_cast<double>(p));
    double worst = 0;
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        double k = modular::kloosterman(a, b, p);
        worst = std::max(worst, std::fabs(k) / bound);
        table.add_row({cell(a), cell(b), cell(k), cell(bound)});
      }
    }
    return render(table, cfg.format, {{"prime", p}, {"max_ratio_to_bound", worst}});
  }
  if (cfg.kind != "charsum") throw ConfigError("unknown kind " + cfg.kind + " (expected charsum or kloosterman)");

  std::int64_t q = cfg.modulus;
  arith::require_squarefree(q, "modulus");
  std::vector<modular::IntegerVector4> vectors;
  if (!cfg.vector4.empty()) {
    if (cfg.vector4.size() != 4) throw ConfigError("--vector takes four integers x,y,z,w");
    vectors.push_back({cfg.vector4[0], cfg.vector4[1], cfg.vector4[2], cfg.vector4[3]});
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::int64_t> residue(0, q - 1);
    while (static_cast<int>(vectors.size()) < cfg.samples) {
      modular::IntegerVector4 s{residue(rng), residue(rng), residue(rng), residue(rng)};
      if (s.primitive_mod(q)) vectors.push_back(s);
    }
  }
  double bound = std::pow(2.0, arith::nu(q)) * std::pow(static_cast<double>(q), 1.5);
  Table table({"q", "x", "y", "z", "w", "re", "im", "abs", "bound"});
  double worst = 0;
  for (const auto& s : vectors) {
    auto v = modular::sl2_charsum(q, s);
    worst = std::max(worst, std::abs(v) / bound);
    table.add_row({cell(q), cell(s.x), cell(s.y), cell(s.z), cell(s.w), cell(v.real()), cell(v.imag()),
                   cell(std::abs(v)), cell(bound)});
  }
  return render(table, cfg.format, {{"modulus", q}, {"seed", cfg.seed}, {"max_ratio_to_bound", worst}});
}

Artifact cmd_aleph(const ExperimentConfig& cfg) {
  auto aleph = sg::aleph_construct(cfg.Y, cfg.modulus, limits_of(cfg));
  Table table({"word", "trace", "norm_sq"});
  for (const auto& e : aleph.members) table.add_row({e.word.to_string(), cell(e.trace), cell(e.norm_sq)});
  Json errors = Json::object();
  auto moduli = cfg.check_moduli.empty() ? std::vector<std::int64_t>{cfg.modulus} : cfg.check_moduli;
  for (auto q : moduli) errors[std::to_string(q)] = sg::aleph_error(aleph.members, q);
  Json summary = {{"Y", cfg.Y},
                  {"modulus", aleph.modulus},
                  {"group_order", aleph.group_order},
                  {"U", aleph.U},
                  {"base_length", aleph.base_length},
                  {"base_size", aleph.base_size},
                  {"popular_size", aleph.popular.size()},
                  {"pivot", aleph.pivot.word.to_string()},
                  {"size", aleph.members.size()},
                  {"equidistribution_error", errors}};
  return render(table, cfg.format, summary);
}

Artifact cmd_build_pi(const ExperimentConfig& cfg) {
  auto xi = sg::build_fixed_length_ball(cfg.alphabet, cfg.X, "Xi", limits_of(cfg));
  auto omega = sg::build_fixed_length_ball(cfg.alphabet, cfg.Z, "Omega", limits_of(cfg));
  auto aleph = sg::aleph_construct(cfg.Y, cfg.modulus, limits_of(cfg));
  auto pi = sg::build_Pi(xi.members, aleph.members, omega.members);
  Table table({"factor", "wordlength", "size", "norm_bound"});
  table.add_row({"Xi", cell(static_cast<std::uint64_t>(xi.length)), cell(static_cast<std::uint64_t>(xi.members.size())),
                 cell(cfg.X)});
  table.add_row({"Aleph", "", cell(static_cast<std::uint64_t>(aleph.members.size())), cell(cfg.Y)});
  table.add_row({"Omega", cell(static_cast<std::uint64_t>(omega.length)),
                 cell(static_cast<std::uint64_t>(omega.members.size())), cell(cfg.Z)});
  table.add_row({"Pi", "", cell(pi.size()), cell(static_cast<double>(pi.norm_bound()))});
  return render(table, cfg.format, {{"size", pi.size()}, {"alphabet", cfg.alphabet}, {"modulus", cfg.modulus}});
}

Artifact cmd_sieve_remainders(const ExperimentConfig& cfg) {
  auto seq = sifting_source(cfg);
  auto profile = sieve::remainder_profile(seq, cfg.cutoff);
  Table table({"q", "A_q", "expected", "remainder"});
  for (const auto& r : profile.rows) table.add_row({cell(r.q), cell(r.count), cell(r.expected), cell(r.remainder)});
  Json summary = {{"source", cfg.source},
                  {"size", profile.source_size},
                  {"cutoff", cfg.cutoff},
                  {"sum_abs_remainder_over_size", to_string(profile.summary)},
                  {"sum_abs_remainder_over_size_approx", to_double(profile.summary)}};
  return render(table, cfg.format, summary);
}

Artifact cmd_almost_prime(const ExperimentConfig& cfg) {
  auto seq = sifting_source(cfg);
  auto count = sieve::almost_prime_census(seq, cfg.z);
  Table table({"source", "alphabet", "N", "z", "count", "size"});
  table.add_row({cfg.source, cell(cfg.alphabet), cell(cfg.norm), cell(cfg.z), cell(count), cell(seq.source_size)});
  return render(table, cfg.format, {{"count", count}, {"size", seq.source_size}});
}

Artifact cmd_squarefree_count(const ExperimentConfig& cfg) {
  auto census = sieve::squarefree_trace_census(cfg.alphabet, cfg.norm, limits_of(cfg));
  Rational fraction = census.ball_size ? Rational(static_cast<long long>(census.count), static_cast<long long>(census.ball_size))
                                       : Rational(0);
  Table table({"alphabet", "N", "count", "ball_size", "fraction", "fraction_approx"});
  table.add_row({cell(cfg.alphabet), cell(cfg.norm), cell(census.count), cell(census.ball_size), cell(fraction),
                 cell(census.fraction())});
  return render(table, cfg.format, {{"count", census.count}, {"ball_size", census.ball_size}});
}

Artifact cmd_discriminants(const ExperimentConfig& cfg) {
  std::uint64_t m = cfg.threshold;
  auto rows = sieve::discriminant_census(cfg.alphabet, cfg.T, [m](std::int64_t) { return m; }, limits_of(cfg));
  Table table({"t", "D", "multiplicity"});
  for (const auto& r : rows) table.add_row({cell(r.t), cell(r.D), cell(r.multiplicity)});
  return render(table, cfg.format, {{"alphabet", cfg.alphabet}, {"T", cfg.T}, {"count", rows.size()}});
}

Artifact cmd_class_census(const ExperimentConfig& cfg) {
  auto classes = sieve::class_census(cfg.disc, cfg.alphabet, limits_of(cfg));
  Table table({"word", "form", "reduced_form", "cycle_length", "cycle_word"});
  for (const auto& c : classes) {
    table.add_row({c.word.to_string(), c.form.to_string(), c.cycle.forms.front().to_string(),
                   cell(static_cast<std::uint64_t>(c.cycle.size())), forms::cycle_to_word(c.cycle).to_string()});
  }
  return render(table, cfg.format, {{"discriminant", cfg.disc}, {"alphabet", cfg.alphabet}, {"classes", classes.size()}});
}

Artifact cmd_class_cycles(const ExperimentConfig& cfg) {
  auto cycles = forms::class_cycles(cfg.disc);
  auto counts = forms::class_counts(cfg.disc);
  // Narrow cycles sharing a canonical word make up one wide class.
  std::map<cf::Word, std::size_t> wide_index;
  Table table({"index", "length", "word", "canonical_word", "wide_class", "forms"});
  Json doc_cycles = Json::array();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    auto word = forms::cycle_to_word(cycles[i]);
    auto canon = word.canonical_rotation();
    auto [it, fresh] = wide_index.emplace(canon, wide_index.size());
    table.add_row({cell(static_cast<std::uint64_t>(i)), cell(static_cast<std::uint64_t>(cycles[i].size())),
                   word.to_string(), canon.to_string(), cell(static_cast<std::uint64_t>(it->second)),
                   forms_join(cycles[i].forms)});
    Json fs = Json::array();
    for (const auto& f : cycles[i].forms) fs.push_back(f.to_string());
    doc_cycles.push_back({{"forms", fs}, {"word", word.to_string()}, {"wide_class", it->second}});
  }
  Json summary = {{"discriminant", cfg.disc},
                  {"fundamental", forms::is_fundamental(cfg.disc)},
                  {"narrow_classes", counts.narrow},
                  {"wide_classes", counts.wide},
                  {"improper_merged_classes", counts.improper_merged}};
  if (cfg.format == "json") {
    Json doc = {{"summary", summary}, {"cycles", doc_cycles}};
    return {doc.dump(2) + "\n", summary};
  }
  return render(table, cfg.format, summary);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Artifact cmd_geodesic(const ExperimentConfig& cfg) {
  if (cfg.word.empty()) throw ConfigError("--word is required");
  auto w = cf::Word::parse(cfg.word);
  auto profile = geodesics::profile(w);
  Json summary = {{"word", w.to_string()},
                  {"discriminant", to_string(profile.discriminant)},
                  {"max_height", profile.max_height},
                  {"cusp_cutoff", cfg.cusp},
                  {"low_lying", profile.max_height <= cfg.cusp}};
  bool as_profile = cfg.emit.empty() ? cfg.format == "json" : ends_with(cfg.emit, ".json");
  if (as_profile) {
    Json doc = {{"period", w.to_string()},
                {"rotationHeights", profile.rotation_heights},
                {"maxHeight", profile.max_height},
                {"discriminant", narrow64(profile.discriminant)}};
    return {doc.dump(2) + "\n", summary};
  }
  Table table({"center", "radius"});
  for (const auto& arc : geodesics::emit_arcs(w)) table.add_row({cell(arc.center), cell(arc.radius)});
  return {table.to_csv(), summary};
}

std::vector<Command> make_commands() {
  std::vector<Command> out;
  out.push_back({"enumerate", "list Gamma_A elements in a norm ball",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   add_alphabet(app, cfg);
                   add_norm(app, cfg);
                   app.add_option("--parity", cfg.parity, "even or any")->check(CLI::IsMember({"even", "any"}));
                   add_limits(app, cfg);
                 },
                 cmd_enumerate});
  out.push_back({"trace-fiber", "elements of a fixed trace grouped into rotation classes",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   add_alphabet(app, cfg);
                   app.add_option("--trace,-t", cfg.trace, "trace t >= 3");
                   add_limits(app, cfg);
                 },
                 cmd_trace_fiber});
  out.push_back({"hensley-fit", "log-log slope of ball counts",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   add_alphabet(app, cfg);
                   app.add_option("--norm-min", cfg.norm_min, "smallest N");
                   app.add_option("--norm-max", cfg.norm_max, "largest N");
                   app.add_option("--points", cfg.points, "grid points, geometric");
                   add_limits(app, cfg);
                 },
                 cmd_hensley_fit});
  out.push_back({"dimension", "Hausdorff dimension brackets",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   add_alphabet(app, cfg);
                   app.add_option("--alphabets", cfg.alphabets, "several alphabet bounds")->delimiter(',');
                   app.add_option("--depth,-k", cfg.depth, "cylinder depth (default: deepest within budget)");
                   app.add_option("--tol", cfg.tol, "bisection tolerance");
                 },
                 cmd_dimension});
  out.push_back({"densities", "local densities over SL2(Z/q)",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   app.add_option("--modulus,-q", cfg.modulus, "square-free modulus");
                 },
                 cmd_densities});
  out.push_back({"expsum", "Kloosterman sums and SL2(Z/q) character sums",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   app.add_option("--kind", cfg.kind, "charsum or kloosterman")
                       ->check(CLI::IsMember({"charsum", "kloosterman"}));
                   app.add_option("--modulus,-q", cfg.modulus, "square-free modulus (charsum)");
                   app.add_option("--prime,-p", cfg.prime, "prime (kloosterman)");
                   app.add_option("--vector", cfg.vector4, "x,y,z,w")->delimiter(',');
                   app.add_option("--samples", cfg.samples, "random primitive vectors when --vector is absent");
                 },
                 cmd_expsum});
  out.push_back({"aleph", "residue-balanced subset of Gamma_2",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   app.add_option("--y", cfg.Y, "norm bound Y");
                   cfg.modulus = 2;
                   app.add_option("--modulus,-B", cfg.modulus, "square-free balancing modulus");
                   app.add_option("--check", cfg.check_moduli, "moduli for the equidistribution error")->delimiter(',');
                   add_limits(app, cfg);
                 },
                 cmd_aleph});
  out.push_back({"build-pi", "bilinear set Xi . Aleph . Omega",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   add_alphabet(app, cfg);
                   app.add_option("--x", cfg.X, "norm bound for Xi");
                   app.add_option("--y", cfg.Y, "norm bound for Aleph");
                   app.add_option("--z", cfg.Z, "norm bound for Omega");
                   cfg.modulus = 2;
                   app.add_option("--modulus,-B", cfg.modulus, "Aleph modulus");
                   add_limits(app, cfg);
                 },
                 cmd_build_pi});
  out.push_back({"sieve-remainders", "remainder ledger r(q) = |A_q| - beta(q)|Pi|",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   add_alphabet(app, cfg);
                   add_norm(app, cfg);
                   app.add_option("--cutoff,-Q", cfg.cutoff, "square-free q < Q");
                   add_source(app, cfg);
                   add_limits(app, cfg);
                 },
                 cmd_sieve_remainders});
  out.push_back({"almost-prime", "values of tr^2 - 4 free of primes <= z",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   add_alphabet(app, cfg);
                   add_norm(app, cfg);
                   app.add_option("--prime-bound", cfg.z, "largest excluded prime factor z");
                   add_source(app, cfg);
                   add_limits(app, cfg);
                 },
                 cmd_almost_prime});
  out.push_back({"squarefree-count", "ball elements with square-free tr^2 - 4",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   add_alphabet(app, cfg);
                   add_norm(app, cfg);
                   add_limits(app, cfg);
                 },
                 cmd_squarefree_count});
  out.push_back({"discriminants", "traces t <= sqrt(T) with square-free t^2 - 4",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   add_alphabet(app, cfg);
                   app.add_option("--T", cfg.T, "bound on D (at most 1e8)");
                   app.add_option("--threshold", cfg.threshold, "minimum multiplicity");
                   add_limits(app, cfg);
                 },
                 cmd_discriminants});
  out.push_back({"class-census", "form classes realized by a trace fiber",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   app.add_option("--disc,-D", cfg.disc, "discriminant t^2 - 4");
                   add_alphabet(app, cfg);
                   add_limits(app, cfg);
                 },
                 cmd_class_census});
  out.push_back({"class-cycles", "reduction cycles of indefinite forms",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   app.add_option("--disc,-D", cfg.disc, "positive non-square discriminant");
                 },
                 cmd_class_cycles});
  out.push_back({"geodesic", "excursion heights and arcs of a periodic word",
                 [](CLI::App& app, ExperimentConfig& cfg) {
                   app.add_option("--word,-w", cfg.word, "comma-separated even period");
                   app.add_option("--emit", cfg.emit, "arcs .csv or profile .json");
                   app.add_option("--cusp", cfg.cusp, "height cutoff for the low-lying test");
                 },
                 cmd_geodesic});
  return out;
}

}  // namespace

const std::vector<Command>& commands() {
  static const std::vector<Command> all = make_commands();
  return all;
}

}  // namespace lowlying::cli
