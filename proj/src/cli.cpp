#include "tilekit/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tilekit/json_io.hpp"
#include "tilekit/steinhaus.hpp"
#include "tilekit/version.hpp"

namespace tilekit {

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitCapped = 2;
constexpr int kExitUsage = 64;

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw CLI::ValidationError("expected a comma-separated integer list");
  return out;
}

std::vector<Point2> parse_point_list(const std::string& s) {
  std::vector<Point2> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto comma = item.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("points must look like \"x,y;x,y\"");
    out.emplace_back(std::stoll(item.substr(0, comma)), std::stoll(item.substr(comma + 1)));
  }
  if (out.empty()) throw CLI::ValidationError("expected a semicolon-separated point list");
  return out;
}

Brick parse_brick(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos) throw CLI::ValidationError("brick must look like \"1/2x1/3\"");
  Rational w(s.substr(0, x)), h(s.substr(x + 1));
  w.canonicalize();
  h.canonicalize();
  return {w, h};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

struct Emitter {
  std::string command;
  std::vector<std::string> argv_tail;
  Json caps = Json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  // Wall time is reported on the human side only: standard output must be
  // byte-identical across runs for fixed inputs.
  int emit(int exit_code, Json result, const std::string& summary) {
    Json manifest{{"command", command},
                  {"parameters", argv_tail},
                  {"version", kVersion},
                  {"resource_caps", caps},
                  {"result_digest", json_digest(result)}};
    result["manifest"] = std::move(manifest);
    std::cout << result.dump(2) << "\n";
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << command << ": " << summary << " [" << ms << " ms]\n";
    return exit_code;
  }
};

std::string set_str(const GroupSubset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out += ",";
    if (s.dim() == 1) {
      out += std::to_string(s.elements()[i][0]);
    } else {
      out += "(";
      for (int c = 0; c < s.dim(); ++c)
        out += (c ? "," : "") + std::to_string(s.elements()[i][static_cast<std::size_t>(c)]);
      out += ")";
    }
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

int run_tiles_z(Emitter& em, const std::string& set_arg, const std::string& method,
                Int max_diameter, const std::string& verify_path) {
  if (!verify_path.empty()) {
    Json j = load_json_file(verify_path);
    TilingCertificate1D cert = certificate_from_json(j.at("certificate"));
    bool ok = verify_certificate(cert);
    return em.emit(ok ? kExitPositive : kExitNegative,
                   Json{{"verdict", ok ? "verified" : "invalid"}},
                   ok ? "certificate verified" : "certificate INVALID");
  }
  FiniteSetZ a = FiniteSetZ::from_ints(parse_int_list(set_arg)).normalized();
  std::optional<TilingCertificate1D> sg, cy;
  try {
    if (method == "stategraph" || method == "both")
      sg = decide_tiles_line_stategraph(a, max_diameter);
    if (method == "cyclotomic" || method == "both") cy = decide_tiles_line_cyclotomic(a);
  } catch (const DiameterTooLarge& e) {
    return em.emit(kExitCapped, Json{{"verdict", "capped"}, {"reason", e.what()}},
                   std::string("resource-capped: ") + e.what());
  }
  if (method == "both") {
    const bool agree = sg.has_value() == cy.has_value() &&
                       (!sg || (sg->period == cy->period));
    if (!agree) throw std::logic_error("state-graph and cyclotomic deciders disagree");
  }
  const auto& cert = (method == "cyclotomic") ? cy : sg;
  Json out{{"verdict", cert ? "tile" : "non-tile"},
           {"method", method},
           {"mask", poly_to_json(mask_polynomial(a).poly)},
           {"cyclotomic_divisors", Json::array()},
           {"bounds",
            Json{{"cyclotomic", int_str(period_bound_cyclotomic(a))},
                 {"newman_exponent", int_str(static_cast<Int>(a.diameter().get_ui()))}}}};
  for (Int s : cyclotomic_divisors(a)) out["cyclotomic_divisors"].push_back(int_str(s));
  if (cert) out["certificate"] = certificate_to_json(*cert);
  std::string summary = cert ? "tiles Z with minimal period " + std::to_string(cert->period)
                             : "does not tile Z";
  return em.emit(cert ? kExitPositive : kExitNegative, out, summary);
}

// shared by complements --verify and vuza --verify: re-check every listed
// tiling and its periodicity flags
int verify_tiling_list(Emitter& em, const std::string& path, const char* key,
                       bool require_aperiodic) {
  Json j = load_json_file(path);
  std::size_t count = 0;
  for (const auto& rec : j.at(key)) {
    const Int n = parse_int(rec.at("n"));
    GroupSubset a = set_from_json(rec.at("A"), n, 1);
    GroupSubset b = set_from_json(rec.at("B"), n, 1);
    if (!verify_tiling_zn(a, b, n))
      return em.emit(kExitNegative, Json{{"verdict", "invalid"}}, "tiling INVALID");
    const auto ap = is_periodic_subset(a, n), bp = is_periodic_subset(b, n);
    const bool flags_ok =
        (rec.at("A_period").is_null() == !ap) && (rec.at("B_period").is_null() == !bp);
    if (!flags_ok || (require_aperiodic && (ap || bp)))
      return em.emit(kExitNegative, Json{{"verdict", "invalid"}},
                     "periodicity flags INVALID");
    ++count;
  }
  return em.emit(kExitPositive, Json{{"verdict", "verified"}},
                 std::to_string(count) + " tiling(s) verified");
}

int run_complements(Emitter& em, Int n, const std::string& set_arg,
                    std::optional<std::size_t> limit, const std::string& verify_path) {
  if (!verify_path.empty()) return verify_tiling_list(em, verify_path, "tilings", false);
  if (n < 1 || set_arg.empty())
    throw CLI::ValidationError("complements requires --n and --set");
  GroupSubset a = GroupSubset::from_residues(n, parse_int_list(set_arg));
  std::vector<GroupSubset> bs;
  try {
    bs = find_complements(a, n, limit);
  } catch (const CardinalityMismatch& e) {
    return em.emit(kExitNegative, Json{{"verdict", "none"}, {"reason", e.what()}}, e.what());
  }
  Json arr = Json::array();
  for (const auto& b : bs) arr.push_back(tiling_to_json({n, a, b}));
  Json out{{"verdict", bs.empty() ? "none" : "found"},
           {"count", int_str(static_cast<Int>(bs.size()))},
           {"tilings", std::move(arr)}};
  return em.emit(bs.empty() ? kExitNegative : kExitPositive, out,
                 std::to_string(bs.size()) + " complement(s) of " + set_str(a) + " in Z_" +
                     std::to_string(n));
}

int run_vuza(Emitter& em, Int n, std::optional<std::size_t> limit, bool full,
             const std::string& verify_path) {
  if (!verify_path.empty()) return verify_tiling_list(em, verify_path, "canons", true);
  if (!full && !limit && n >= 108) limit = 10;  // full enumeration is gated
  auto canons = enumerate_vuza(n, limit);
  Json arr = Json::array();
  for (const auto& t : canons) arr.push_back(tiling_to_json(t));
  Json out{{"verdict", canons.empty() ? "none" : "found"},
           {"count", int_str(static_cast<Int>(canons.size()))},
           {"canons", std::move(arr)}};
  return em.emit(canons.empty() ? kExitNegative : kExitPositive, out,
                 std::to_string(canons.size()) + " aperiodic-by-aperiodic tiling(s) of Z_" +
                     std::to_string(n));
}

int run_good_group(Emitter& em, Int n) {
  auto v = is_good_group(n);
  Json out{{"verdict", v.is_good ? "good" : "not-good"},
           {"n", int_str(n)},
           {"pattern", v.is_good ? Json(v.pattern) : Json(nullptr)}};
  return em.emit(v.is_good ? kExitPositive : kExitNegative, out,
                 "Z_" + std::to_string(n) +
                     (v.is_good ? " is good (" + v.pattern + ")" : " is not good"));
}

int run_tiles_z2(Emitter& em, const std::string& points_arg, Int max_n, Int max_period,
                 const std::string& verify_path) {
  if (!verify_path.empty()) {
    Json j = load_json_file(verify_path);
    LatticeSet2D a(points_from_json(j.at("points")));
    bool ok = false;
    std::string what;
    if (j.at("verdict") == "YES") {
      ok = verify_periodic_complement(a, planar_certificate_from_json(j.at("certificate")));
      what = "periodic certificate";
    } else if (j.at("verdict") == "NO") {
      ok = verify_no_witness(a, parse_int(j.at("witness_n")));
      what = "non-tile witness";
    }
    return em.emit(ok ? kExitPositive : kExitNegative,
                   Json{{"verdict", ok ? "verified" : "invalid"}},
                   what + (ok ? " verified" : " INVALID"));
  }
  LatticeSet2D a(parse_point_list(points_arg));
  em.caps = Json{{"max_n", int_str(max_n)}, {"max_period", int_str(max_period)}};
  Decision2D d = decide_tiles_z2(a, {max_n, max_period, 20'000'000});
  Json out{{"points", points_to_json(a.normalized().points())}};
  int code = kExitCapped;
  std::string summary = "undecided within bounds";
  switch (d.verdict) {
    case Decision2D::Verdict::YES:
      out["verdict"] = "YES";
      out["certificate"] = planar_certificate_to_json(*d.certificate);
      code = kExitPositive;
      summary = "tiles Z^2 with periods (" + std::to_string(d.certificate->a) + "," +
                std::to_string(d.certificate->b) + ")";
      break;
    case Decision2D::Verdict::NO:
      out["verdict"] = "NO";
      out["witness_n"] = int_str(*d.witness_n);
      code = kExitNegative;
      summary = "cannot cover the window of radius " + std::to_string(*d.witness_n);
      break;
    case Decision2D::Verdict::UNKNOWN:
      out["verdict"] = "UNKNOWN";
      break;
  }
  return em.emit(code, out, summary);
}

int run_aperiodic(Emitter& em, Int radius, const std::string& variant,
                  const std::string& out_path, const std::string& verify_path) {
  if (!verify_path.empty()) {
    Json j = load_json_file(verify_path);
    LatticeSet2D tile(points_from_json(j.at("tile")));
    const bool ok = covers_window_exactly_once(tile, points_from_json(j.at("locations")),
                                               parse_int(j.at("core_radius")));
    return em.emit(ok ? kExitPositive : kExitNegative,
                   Json{{"verdict", ok ? "verified" : "invalid"}},
                   ok ? "window coverage verified" : "window coverage INVALID");
  }
  std::vector<Point2> locs;
  LatticeSet2D tile({{0, 0}});
  if (variant == "interleaved") {
    locs = generate_aperiodic_tiling(radius);
    tile = LatticeSet2D({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
  } else if (variant == "column-shift") {
    locs = shift_column_tiling(radius);
    tile = LatticeSet2D({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  } else {
    throw CLI::ValidationError("variant must be interleaved or column-shift");
  }
  const Int core = radius - 2 * tile.diameter();
  const bool covered = covers_window_exactly_once(tile, locs, core);
  Json out{{"verdict", covered ? "generated" : "internal-error"},
           {"radius", int_str(radius)},
           {"tile", points_to_json(tile.points())},
           {"core_radius", int_str(core)},
           {"locations", points_to_json(locs)}};
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << out.dump(2) << "\n";
  }
  return em.emit(covered ? kExitPositive : kExitNegative, out,
                 "generated " + std::to_string(locs.size()) + " translate locations");
}

int run_bricks(Emitter& em, const std::string& a_arg, const std::string& b_arg,
               bool construct, const std::string& verify_path) {
  if (!verify_path.empty()) {
    Json j = load_json_file(verify_path);
    Brick a = {rational_from_json(j.at("a_brick").at(0)), rational_from_json(j.at("a_brick").at(1))};
    Brick b = {rational_from_json(j.at("b_brick").at(0)), rational_from_json(j.at("b_brick").at(1))};
    bool ok = verify_rect_tiling(placements_from_json(j.at("placements")), a, b);
    return em.emit(ok ? kExitPositive : kExitNegative,
                   Json{{"verdict", ok ? "verified" : "invalid"}},
                   ok ? "brick tiling verified" : "brick tiling INVALID");
  }
  Brick a = parse_brick(a_arg), b = parse_brick(b_arg);
  BrickDecision d = decide_two_bricks(a, b);
  Json out{{"verdict", d.tileable ? "tileable" : "not-tileable"},
           {"mode", to_string(d.mode)},
           {"a_brick", Json::array({rational_to_json(a.w), rational_to_json(a.h)})},
           {"b_brick", Json::array({rational_to_json(b.w), rational_to_json(b.h)})}};
  if (d.mode == BrickMode::HorizontalCut || d.mode == BrickMode::VerticalCut) {
    out["k"] = int_str(d.k);
    out["l"] = int_str(d.l);
    out["cut"] = rational_to_json(d.cut);
  }
  if (d.tileable && construct)
    out["placements"] = placements_to_json(construct_separated_tiling(d, a, b));
  return em.emit(d.tileable ? kExitPositive : kExitNegative, out,
                 d.tileable ? "tileable, mode " + to_string(d.mode) : "not tileable");
}

int run_hadamard(Emitter& em, const std::string& check_path, Int fourier_k, double tol) {
  if (fourier_k > 0) {
    ButsonMatrix m = fourier_matrix(fourier_k);
    bool ok = is_complex_hadamard(to_complex(m), tol);
    Json out{{"verdict", ok ? "hadamard" : "not-hadamard"}, {"matrix", butson_to_json(m)}};
    return em.emit(ok ? kExitPositive : kExitNegative, out,
                   "Fourier matrix of order " + std::to_string(fourier_k));
  }
  ButsonMatrix m = butson_from_json(load_json_file(check_path));
  const bool numeric = is_complex_hadamard(to_complex(m), tol);
  const bool exact = is_log_hadamard(phase_matrix(m));
  if (numeric != exact)
    throw std::logic_error("numeric and exact Hadamard checks disagree");
  Json out{{"verdict", exact ? "hadamard" : "not-hadamard"},
           {"k", int_str(static_cast<Int>(m.size))},
           {"root_order", int_str(m.root_order)}};
  return em.emit(exact ? kExitPositive : kExitNegative, out,
                 exact ? "matrix is complex Hadamard" : "matrix is NOT complex Hadamard");
}

int run_butson(Emitter& em, Int k, Int q, std::optional<std::size_t> limit) {
  auto found = find_butson(k, q, limit);
  Json arr = Json::array();
  for (const auto& m : found) arr.push_back(butson_to_json(m));
  Json out{{"verdict", found.empty() ? "none" : "found"},
           {"count", int_str(static_cast<Int>(found.size()))},
           {"matrices", std::move(arr)}};
  return em.emit(found.empty() ? kExitNegative : kExitPositive, out,
                 std::to_string(found.size()) + " BH(" + std::to_string(k) + "," +
                     std::to_string(q) + ") representative(s)");
}

int run_spectral(Emitter& em, Int n, int d, const std::string& set_arg, bool nontile_demo,
                 const std::string& verify_path) {
  if (!verify_path.empty()) {
    Json j = load_json_file(verify_path);
    Int vn = parse_int(j.at("n"));
    int vd = static_cast<int>(parse_int(j.at("d")));
    GroupSubset s = set_from_json(j.at("S"), vn, vd);
    GroupSubset q = set_from_json(j.at("Q"), vn, vd);
    bool ok = spectral_pair_check(s, q);
    return em.emit(ok ? kExitPositive : kExitNegative,
                   Json{{"verdict", ok ? "verified" : "invalid"}},
                   ok ? "spectral pair verified" : "spectral pair INVALID");
  }
  if (nontile_demo) {
    SpectralPair p = spectral_non_tile_z3_5();
    const bool power = power_spectrum_tiling_check(p.s, p.q);
    const bool tiles = tiles_group(p.s).has_value();
    Json out{{"verdict", "spectral-non-tile"},
             {"n", int_str(p.n)},
             {"d", int_str(p.d)},
             {"S", set_to_json(p.s)},
             {"Q", set_to_json(p.q)},
             {"power_spectrum_level", int_str(static_cast<Int>(p.s.size() * p.s.size()))},
             {"power_spectrum_holds", power},
             {"tiles", tiles}};
    if (tiles) throw std::logic_error("cardinality obstruction violated");
    return em.emit(kExitPositive, out,
                   "spectral 6-element set in Z_3^5 with no tiling complement");
  }
  GroupSubset s = [&] {
    if (d == 1) return GroupSubset::from_residues(n, parse_int_list(set_arg));
    std::vector<std::vector<Int>> elems;
    for (const auto& p : parse_point_list(set_arg)) elems.push_back({p.first, p.second});
    return GroupSubset(n, d, std::move(elems));
  }();
  auto q = find_spectrum(s);
  Json out{{"verdict", q ? "spectral" : "not-spectral"},
           {"n", int_str(n)},
           {"d", int_str(d)},
           {"S", set_to_json(s)}};
  std::string summary = set_str(s) + (q ? " is spectral" : " has no spectrum");
  if (q) {
    out["Q"] = set_to_json(*q);
    out["power_spectrum_holds"] = power_spectrum_tiling_check(s, *q);
    auto complement = tiles_group(s);
    out["tiles"] = complement.has_value();
    if (complement) out["complement"] = set_to_json(*complement);
  }
  return em.emit(q ? kExitPositive : kExitNegative, out, summary);
}

int run_fuglede_sweep(Emitter& em, Int max_n) {
  Int checked = 0, tiles_count = 0;
  Json counterexamples = Json::array();
  for (Int n = 1; n <= max_n; ++n) {
    const Int total = Int{1} << n;
    for (Int mask = 1; mask < total; ++mask) {
      std::vector<Int> elems;
      for (Int i = 0; i < n; ++i)
        if (mask & (Int{1} << i)) elems.push_back(i);
      GroupSubset s = GroupSubset::from_residues(n, elems);
      const bool t = tiles_group(s).has_value();
      const bool sp = find_spectrum(s).has_value();
      ++checked;
      if (t) ++tiles_count;
      if (t != sp)
        counterexamples.push_back(Json{{"n", int_str(n)},
                                       {"S", set_to_json(s)},
                                       {"tiles", t},
                                       {"spectral", sp}});
    }
  }
  const bool agree = counterexamples.empty();
  Json out{{"verdict", agree ? "agreement" : "counterexample"},
           {"max_n", int_str(max_n)},
           {"checked", int_str(checked)},
           {"tiles", int_str(tiles_count)},
           {"counterexamples", std::move(counterexamples)}};
  return em.emit(agree ? kExitPositive : kExitNegative, out,
                 agree ? "tile <=> spectral on all " + std::to_string(checked) + " subsets"
                       : "DISCOVERY: tile/spectral disagreement (see JSON)");
}

int run_steinhaus(Emitter& em, long long n_max, int samples) {
  FejerSumFunction f;
  const double min_val = positivity_scan(f, 1e-3, 0.0, 100.0);
  double max_dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = (i + 0.5) / samples;
    max_dev = std::max(max_dev, std::abs(translate_sum(f, x, n_max) - 2.0));
  }
  const bool ok = min_val > 0 && max_dev <= 1e-2;
  Json out{{"verdict", ok ? "ok" : "violated"},
           {"min_value", min_val},
           {"max_deviation", max_dev},
           {"level", "2"},
           {"N", int_str(n_max)},
           {"samples", int_str(samples)}};
  std::ostringstream sum;
  sum << "min f = " << min_val << ", max |sum - 2| = " << max_dev;
  return em.emit(ok ? kExitPositive : kExitNegative, out, sum.str());
}

}  // namespace

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"exact toolkit for translational tilings, spectral sets and "
               "complex Hadamard matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  int threads = 1;
  app.add_option("--threads", threads, "worker count (results are identical for any value)")
      ->check(CLI::PositiveNumber);
  std::string seed;
  app.add_option("--seed", seed, "rejected: all algorithms are deterministic");

  // tiles-z
  auto* tz = app.add_subcommand("tiles-z", "decide whether a finite set tiles Z");
  std::string tz_set, tz_method = "both", tz_verify;
  Int tz_maxd = kDefaultMaxDiameter;
  tz->add_option("--set", tz_set, "comma-separated integers");
  tz->add_option("--method", tz_method)->check(CLI::IsMember({"stategraph", "cyclotomic", "both"}));
  tz->add_option("--max-diameter", tz_maxd);
  tz->add_option("--verify", tz_verify, "re-verify an emitted certificate file");
  tz->add_flag("--json", "JSON output (always on)");

  // complements
  auto* co = app.add_subcommand("complements", "tiling complements in Z_n");
  Int co_n = 0;
  std::string co_set;
  std::optional<std::size_t> co_limit;
  co->add_option("--n", co_n);
  co->add_option("--set", co_set);
  co->add_option("--limit", co_limit);
  std::string co_verify;
  co->add_option("--verify", co_verify);
  co->add_flag("--json", "JSON output (always on)");

  // vuza
  auto* vu = app.add_subcommand("vuza", "tilings of Z_n with two aperiodic factors");
  Int vu_n = 1;
  std::optional<std::size_t> vu_limit;
  bool vu_full = false;
  vu->add_option("--n", vu_n)->required();
  vu->add_option("--limit", vu_limit);
  vu->add_flag("--full", vu_full, "allow unbounded enumeration for n >= 108");
  std::string vu_verify;
  vu->add_option("--verify", vu_verify);
  vu->add_flag("--json", "JSON output (always on)");

  // good-group
  auto* gg = app.add_subcommand("good-group", "Sands classification of Z_n");
  Int gg_n = 1;
  gg->add_option("--n", gg_n)->required();
  gg->add_flag("--json", "JSON output (always on)");

  // tiles-z2
  auto* t2 = app.add_subcommand("tiles-z2", "bounded tiling decision in Z^2");
  std::string t2_points, t2_verify;
  Int t2_maxn = 12, t2_maxp = 12;
  t2->add_option("--points", t2_points, "\"x,y;x,y;...\"");
  t2->add_option("--max-n", t2_maxn);
  t2->add_option("--max-period", t2_maxp);
  t2->add_option("--verify", t2_verify);
  t2->add_flag("--json", "JSON output (always on)");

  // aperiodic
  auto* ap = app.add_subcommand("aperiodic", "generate tilings with missing periods");
  Int ap_radius = 20;
  std::string ap_out, ap_variant = "interleaved";
  ap->add_option("--radius", ap_radius);
  ap->add_option("--out", ap_out);
  ap->add_option("--variant", ap_variant)
      ->check(CLI::IsMember({"interleaved", "column-shift"}));
  std::string ap_verify;
  ap->add_option("--verify", ap_verify);
  ap->add_flag("--json", "JSON output (always on)");

  // bricks
  auto* br = app.add_subcommand("bricks", "two brick types in the unit square");
  std::string br_a, br_b, br_verify;
  bool br_construct = false;
  br->add_option("--a", br_a, "brick A, e.g. 1/2x1/3");
  br->add_option("--b", br_b, "brick B, e.g. 1/3x1/6");
  br->add_flag("--construct", br_construct);
  br->add_option("--verify", br_verify);
  br->add_flag("--json", "JSON output (always on)");

  // hadamard
  auto* ha = app.add_subcommand("hadamard", "complex Hadamard checks");
  std::string ha_check;
  Int ha_fourier = 0;
  double ha_tol = kHadamardTol;
  ha->add_option("--check", ha_check, "exponent-table JSON file");
  ha->add_option("--fourier", ha_fourier, "emit and check the Fourier matrix F_k");
  ha->add_option("--tol", ha_tol);
  ha->add_flag("--json", "JSON output (always on)");

  // butson
  auto* bu = app.add_subcommand("butson", "search dephased BH(k, q) matrices");
  Int bu_k = 1, bu_q = 1;
  std::optional<std::size_t> bu_limit;
  bu->add_option("--k", bu_k)->required();
  bu->add_option("--q", bu_q)->required();
  bu->add_option("--limit", bu_limit);
  bu->add_flag("--json", "JSON output (always on)");

  // spectral
  auto* sp = app.add_subcommand("spectral", "spectra and spectral pairs in Z_n^d");
  Int sp_n = 1;
  int sp_d = 1;
  std::string sp_set, sp_verify;
  bool sp_demo = false;
  sp->add_option("--n", sp_n);
  sp->add_option("--d", sp_d);
  sp->add_option("--set", sp_set, "residues (d=1) or \"x,y;x,y\" (d=2)");
  sp->add_flag("--nontile-demo", sp_demo, "spectral non-tile pipeline in Z_3^5");
  sp->add_option("--verify", sp_verify);
  sp->add_flag("--json", "JSON output (always on)");

  // fuglede-sweep
  auto* fu = app.add_subcommand("fuglede-sweep", "tile <=> spectral sweep over Z_n");
  Int fu_maxn = 12;
  fu->add_option("--max-n", fu_maxn);
  fu->add_flag("--json", "JSON output (always on)");

  // steinhaus
  auto* st = app.add_subcommand("steinhaus", "positive function tiling R with Z");
  long long st_n = 10000;
  int st_samples = 100;
  bool st_check = false;
  st->add_flag("--check", st_check);
  st->add_option("--N", st_n);
  st->add_option("--samples", st_samples);
  st->add_flag("--json", "JSON output (always on)");

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!seed.empty()) {
    std::cerr << "--seed is rejected: all algorithms are deterministic\n";
    return kExitUsage;
  }

  Emitter em;
  em.argv_tail.assign(argv + 1, argv + argc);
  em.command = app.get_subcommands().front()->get_name();

  try {
    if (tz->parsed()) {
      em.caps = Json{{"max_diameter", int_str(tz_maxd)},
                     {"max_states", int_str(static_cast<Int>(max_state_budget()))}};
      return run_tiles_z(em, tz_set, tz_method, tz_maxd, tz_verify);
    }
    if (co->parsed()) return run_complements(em, co_n, co_set, co_limit, co_verify);
    if (vu->parsed()) return run_vuza(em, vu_n, vu_limit, vu_full, vu_verify);
    if (gg->parsed()) return run_good_group(em, gg_n);
    if (t2->parsed()) return run_tiles_z2(em, t2_points, t2_maxn, t2_maxp, t2_verify);
    if (ap->parsed()) return run_aperiodic(em, ap_radius, ap_variant, ap_out, ap_verify);
    if (br->parsed()) return run_bricks(em, br_a, br_b, br_construct, br_verify);
    if (ha->parsed()) return run_hadamard(em, ha_check, ha_fourier, ha_tol);
    if (bu->parsed()) return run_butson(em, bu_k, bu_q, bu_limit);
    if (sp->parsed()) return run_spectral(em, sp_n, sp_d, sp_set, sp_demo, sp_verify);
    if (fu->parsed()) return run_fuglede_sweep(em, fu_maxn);
    if (st->parsed()) return run_steinhaus(em, st_n, st_samples);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapped;
  }
  return kExitUsage;
}

}  // namespace tilekit
