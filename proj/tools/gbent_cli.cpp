// gbent: analysis and construction of generalized bent functions V_n -> Z_{2^k}.
//
// Exit status: 0 gbent / success, 1 not gbent (or the property asked about
// fails), 2 input error, 3 internal disagreement between test routes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "gbent/analysis.hpp"
#include "gbent/bitmatrix.hpp"
#include "gbent/constructions.hpp"
#include "gbent/duality.hpp"
#include "gbent/error.hpp"
#include "gbent/gbf.hpp"
#include "gbent/report_io.hpp"
#include "gbent/search.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kDisagreement = 3;

struct Input {
  std::string path;
  std::string inline_text;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("file", in.path, "Input file, or - for standard input");
  cmd->add_option("-e,--inline", in.inline_text, "Function text given inline; ';' separates lines");
}

std::string read_text(const Input& in) {
  if (!in.inline_text.empty()) {
    std::string text = in.inline_text;
    for (auto& ch : text) {
      if (ch == ';') ch = '\n';
    }
    return text;
  }
  if (in.path.empty()) throw gbent::Error(gbent::ErrorCode::Parse, "no input given (file, - or --inline)");
  std::ostringstream buf;
  if (in.path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream file(in.path);
    if (!file) throw gbent::Error(gbent::ErrorCode::Parse, "cannot open " + in.path);
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw gbent::Error(gbent::ErrorCode::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

gbent::Gbf read_gbf(const Input& in) { return gbent::parse_gbf(read_text(in)); }

std::string zq_name(const gbent::Gbf& f) { return "Z_" + std::to_string(f.modulus()); }

int cmd_wht(const Input& in, bool hex, bool json) {
  const auto f = gbent::parse_truth_table(read_text(in), hex);
  const auto w = gbent::wht(f);
  const auto cls = gbent::classify(w);
  if (json) {
    auto j = gbent::to_json(w);
    j["spectral_class"] = gbent::to_json(cls);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  for (std::size_t u = 0; u < w.values.size(); ++u) std::cout << (u ? " " : "") << w.values[u];
  std::cout << "\nclass: " << cls.to_string() << '\n';
  return kOk;
}

int cmd_gwht(const Input& in, bool json) {
  const auto f = read_gbf(in);
  const auto h = gbent::gwht(f);
  if (json) {
    std::cout << gbent::to_json(h).dump(2) << '\n';
    return kOk;
  }
  std::cout << "# u: coefficients of 1, z, ..., z^" << h.width() - 1 << " (z = zeta_" << f.modulus() << ")\n";
  for (std::uint64_t u = 0; u < h.size(); ++u) {
    std::cout << u << ':';
    for (auto c : h.coeffs(u)) std::cout << ' ' << c;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_check(const Input& in, bool verbose, bool json) {
  const auto f = read_gbf(in);
  const auto routes = gbent::check_all_routes(f);
  const bool gbent_ok = routes.verdict();
  std::optional<gbent::ZqBentReport> zq;
  if (gbent_ok && f.n() % 2 == 0) zq = gbent::is_zq_bent(f);

  if (json) {
    auto j = gbent::to_json(routes, verbose);
    if (zq) j["zq"] = gbent::to_json(*zq);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n=" << f.n() << " k=" << f.k() << '\n';
    for (const auto* r : {&routes.direct, &routes.spectral, &routes.quadruple}) {
      std::cout << gbent::to_string(r->method) << ": " << (r->verdict ? "gbent" : "not gbent") << '\n';
    }
    if (!gbent_ok) {
      std::cout << "not gbent\n";
    } else if (zq) {
      std::cout << "gbent, " << zq_name(f) << "-bent: " << (zq->verdict() ? "yes" : "no") << '\n';
    } else {
      std::cout << "gbent (odd n)\n";
    }
    if (verbose) {
      std::cout << "# u r sign zero_half\n" << gbent::format_witness_table(routes.direct);
    }
  }
  if (!routes.agree()) {
    std::cerr << "error: gbent routes disagree (direct " << routes.direct.verdict << ", spectral "
              << routes.spectral.verdict << ", quadruple " << routes.quadruple.verdict << ")\n";
    for (const auto* r : {&routes.direct, &routes.spectral, &routes.quadruple}) {
      std::cerr << "  " << gbent::to_string(r->method) << " fails at " << r->failures.size() << " points";
      if (!r->failures.empty()) std::cerr << ", first u = " << r->failures.front();
      std::cerr << '\n';
    }
    return kDisagreement;
  }
  return gbent_ok ? kOk : kNo;
}

int cmd_space(const Input& in, bool json) {
  const auto f = read_gbf(in);
  const auto report = gbent::bent_space_report(f);
  if (json) {
    std::cout << gbent::to_json(report).dump(2) << '\n';
  } else {
    const bool even = f.n() % 2 == 0;
    std::cout << "affine " << (even ? "bent" : "semi-bent") << " space: " << (report.is_affine_bent_space ? "yes" : "no")
              << '\n';
    std::cout << "majority triples " << (even ? "bent" : "semi-bent") << ": " << (report.mesnager_closed ? "yes" : "no")
              << '\n';
    if (even) {
      std::cout << "dual sums vanish on zero-sum quadruples: " << (report.dual_sum_closed.value_or(false) ? "yes" : "no")
                << '\n';
    } else if (report.split_functional) {
      std::cout << "L_1 = ker " << *report.split_functional << ", basis:";
      for (auto b : report.split_basis) std::cout << ' ' << b;
      std::cout << '\n';
    } else {
      std::cout << "no hyperplane L_1 splits the spectra\n";
    }
    std::cout << "space of a gbent function: " << (report.space_is_gbent() ? "yes" : "no") << '\n';
    std::cout << "structure: " << (report.holds() ? "gbent" : "not gbent") << '\n';
  }
  return report.holds() ? kOk : kNo;
}

int cmd_dual(const Input& in) {
  const auto f = read_gbf(in);
  std::cout << gbent::format_gbf(gbent::dual_gbent(f));
  return kOk;
}

int cmd_gray(const Input& in, bool hex) {
  const auto f = read_gbf(in);
  const auto g = gbent::gray_map(f);
  std::cout << "# gray image of a function in GB_" << f.n() << "^" << f.modulus() << ": n=" << f.n() << " k=" << f.k()
            << ", " << g.n() << " variables, index = x + 2^" << f.n() << " y\n";
  std::cout << gbent::format_truth_table(g, hex);
  return kOk;
}

int cmd_zq(const Input& in, bool json) {
  const auto f = read_gbf(in);
  const auto report = gbent::is_zq_bent(f);
  if (json) {
    std::cout << gbent::to_json(report).dump(2) << '\n';
  } else {
    std::cout << "multipliers:";
    for (const auto& [a, ok] : report.per_multiplier) std::cout << ' ' << a << (ok ? "+" : "-");
    std::cout << "\ntruncations:";
    for (std::size_t t = 0; t < report.per_truncation.size(); ++t) std::cout << ' ' << t << (report.per_truncation[t] ? "+" : "-");
    std::cout << '\n' << zq_name(f) << "-bent: " << (report.verdict() ? "yes" : "no") << '\n';
  }
  if (!report.consistent()) {
    std::cerr << "error: definition and truncation routes disagree\n";
    return kDisagreement;
  }
  return report.verdict() ? kOk : kNo;
}

int cmd_rds(const Input& in) {
  const auto f = read_gbf(in);
  const bool ok = gbent::verify_rds(f);
  std::cout << "(" << f.size() << ", " << f.modulus() << ", " << f.size() << ", "
            << (f.k() <= f.n() ? std::to_string(std::uint64_t{1} << (f.n() - f.k())) : std::string("-"))
            << ") relative difference set: " << (ok ? "yes" : "no") << '\n';
  return ok ? kOk : kNo;
}

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(token, &used, 0);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw gbent::Error(gbent::ErrorCode::Parse, "bad list entry `" + token + "`");
    }
  }
  return out;
}

struct ConstructOptions {
  int m = 4;
  int k = 3;
  std::uint32_t c = 1;
  std::string pi;
  std::string phi;
  std::vector<std::string> inputs;
};

int cmd_construct_mm(const ConstructOptions& o) {
  const gbent::Field field(o.m);
  std::vector<std::uint32_t> pi;
  if (o.pi.empty()) {
    for (std::uint32_t y = 0; y < field.size(); ++y) pi.push_back(y);
  } else {
    pi = parse_list(o.pi);
  }
  const auto h = gbent::mm_bent(field, pi);
  std::cout << gbent::format_gbf(gbent::Gbf::from_function(h.n(), 1, [&](std::uint64_t x) { return h(x); }));
  return kOk;
}

int cmd_construct_spread(const ConstructOptions& o) {
  const auto spread = gbent::regular_spread(o.m);
  const auto phi = o.phi.empty() ? gbent::default_phi(o.m, o.k) : parse_list(o.phi);
  std::cout << gbent::format_gbf(gbent::spread_zqbent(spread, o.k, phi));
  return kOk;
}

int cmd_construct_mesnager(const ConstructOptions& o) {
  if (o.inputs.size() != 3) throw gbent::Error(gbent::ErrorCode::Parse, "mesnager needs three truth-table files");
  std::vector<gbent::BooleanFunction> g;
  for (const auto& path : o.inputs) g.push_back(gbent::parse_truth_table(read_file(path)));
  const auto out = gbent::mesnager_secondary(g[0], g[1], g[2]);
  std::cout << gbent::format_gbf(gbent::Gbf::from_function(out.n(), 1, [&](std::uint64_t x) { return out(x); }));
  return kOk;
}

struct TransformOptions {
  std::string a_path;
  std::string b_path;
  std::uint32_t b_mask = 0;
  bool random = false;
  std::uint64_t seed = 1;
};

int cmd_transform(const Input& in, const TransformOptions& o) {
  const auto f = read_gbf(in);
  const int n = f.n();
  const int k = f.k();
  const bool gbent_in = gbent::is_gbent(f);
  const bool odd = n % 2 != 0;
  gbent::LinearTransform t = gbent::identity_transform(n, k);
  if (o.random) {
    std::mt19937_64 rng(o.seed);
    t = gbent::random_transform(n, k, rng, odd);
    std::cerr << "# A\n" << gbent::format_matrix(t.A) << "# B\n" << gbent::format_matrix(t.B) << "# b " << t.b_mask << '\n';
  } else {
    if (!o.a_path.empty()) t.A = gbent::parse_matrix(read_file(o.a_path));
    if (!o.b_path.empty()) t.B = gbent::parse_matrix(read_file(o.b_path));
    t.b_mask = o.b_mask;
  }
  // The standard representation of an odd-n gbent function puts L_1 at <a_0, ..., a_{k-3}>.
  std::optional<std::uint32_t> l1;
  if (odd && gbent_in && k >= 2) l1 = std::uint32_t{1} << (k - 2);
  std::cout << gbent::format_gbf(gbent::apply_equivalence(f, t, l1));
  return kOk;
}

int cmd_lift(const Input& in, int r) {
  const auto f = read_gbf(in);
  std::cout << gbent::format_gbf(gbent::lift(f, r));
  return kOk;
}

int cmd_search(const gbent::SearchOptions& options, bool quiet, bool json) {
  const auto result = gbent::search(options);
  if (json) {
    nlohmann::json hits = nlohmann::json::array();
    if (!quiet) {
      for (const auto& f : result.hits) hits.push_back(std::vector<std::uint32_t>(f.values().begin(), f.values().end()));
    }
    nlohmann::json j = {{"n", options.n},
                        {"k", options.k},
                        {"total", result.total},
                        {"direct", result.direct_count},
                        {"spectral", result.spectral_count},
                        {"disagreements", result.disagreements.size()}};
    if (!quiet) j["hits"] = std::move(hits);
    std::cout << j.dump(2) << '\n';
  } else {
    if (!quiet) {
      for (const auto& f : result.hits) std::cout << gbent::format_gbf(f);
    }
    std::cout << "# direct=" << result.direct_count << " spectral=" << result.spectral_count
              << " disagreements=" << result.disagreements.size() << '\n';
    std::cout << result.direct_count << '/' << result.total << '\n';
  }
  return result.disagreements.empty() ? kOk : kDisagreement;
}

int exit_code_for(const gbent::Error& e) {
  switch (e.code()) {
    case gbent::ErrorCode::NotGbent:
    case gbent::ErrorCode::NotBent:
    case gbent::ErrorCode::DualSumNonzero:
      return kNo;
    case gbent::ErrorCode::InternalInconsistency:
      return kDisagreement;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized bent functions V_n -> Z_{2^k}: tests, duals, Gray maps, constructions"};
  app.require_subcommand(1);

  Input in;
  bool hex = false;
  bool json = false;
  bool verbose = false;

  auto* wht = app.add_subcommand("wht", "Walsh-Hadamard spectrum of a Boolean truth table");
  add_input(wht, in);
  wht->add_flag("--hex", hex, "Truth table given in hex");
  wht->add_flag("--json", json, "JSON output");

  auto* gwht = app.add_subcommand("gwht", "Exact generalized Walsh-Hadamard spectrum");
  add_input(gwht, in);
  gwht->add_flag("--json", json, "JSON output");

  auto* check = app.add_subcommand("check", "Gbent test by three independent routes");
  add_input(check, in);
  check->add_flag("-v,--verbose", verbose, "Print the per-u witness table");
  check->add_flag("--json", json, "JSON output");

  auto* space = app.add_subcommand("space", "Affine (semi-)bent space structure of the components");
  add_input(space, in);
  space->add_flag("--json", json, "JSON output");

  auto* dual = app.add_subcommand("dual", "Dual of an even-n gbent function");
  add_input(dual, in);

  auto* gray = app.add_subcommand("gray", "Gray image on n + k - 1 variables");
  add_input(gray, in);
  gray->add_flag("--hex", hex, "Emit the truth table in hex");

  auto* zq = app.add_subcommand("zq", "Z_q-bent test (all multiples and all truncations)");
  add_input(zq, in);
  zq->add_flag("--json", json, "JSON output");

  auto* rds = app.add_subcommand("rds", "Relative difference set test by pair counting");
  add_input(rds, in);

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "Build a known function");
  construct->require_subcommand(1);
  auto* mm = construct->add_subcommand("mm", "Tr(x pi(y)) on F_{2^m} x F_{2^m}");
  mm->add_option("--m", co.m, "Field degree")->check(CLI::Range(1, 12));
  mm->add_option("--pi", co.pi, "Permutation as comma-separated images (default identity)");
  auto* ex1 = construct->add_subcommand("example1", "Z_8-bent trace function on 2m variables");
  ex1->add_option("--m", co.m, "Field degree (4 or 8)");
  ex1->add_option("--c", co.c, "Nonzero field element c");
  auto* spread = construct->add_subcommand("spread", "Z_{2^k}-bent function from the regular spread");
  spread->add_option("--m", co.m, "Half dimension")->check(CLI::Range(1, 8));
  spread->add_option("--k", co.k, "Modulus exponent (k <= m)")->check(CLI::Range(1, 16));
  spread->add_option("--phi", co.phi, "Balanced map as comma-separated values for s = 1..2^m");
  auto* mes = construct->add_subcommand("mesnager", "g0 g1 + g0 g2 + g1 g2 from three bent truth tables");
  mes->add_option("files", co.inputs, "Three truth-table files")->expected(3);

  TransformOptions to;
  auto* transform = app.add_subcommand("transform", "Apply x -> Ax and the coordinate change (B, b)");
  add_input(transform, in);
  transform->add_option("--A", to.a_path, "n x n matrix file");
  transform->add_option("--B", to.b_path, "(k-1) x (k-1) matrix file");
  transform->add_option("--b", to.b_mask, "Mask of a_0..a_{k-2} added to a_{k-1}");
  transform->add_flag("--random-transform", to.random, "Sample A, B, b (printed to stderr)");
  transform->add_option("--seed", to.seed, "Seed for --random-transform");

  int r = 0;
  auto* lift = app.add_subcommand("lift", "Embed a gbent function into GB_n^{2^r}");
  add_input(lift, in);
  lift->add_option("--r", r, "Target exponent r >= k")->required();

  gbent::SearchOptions so;
  std::uint64_t samples = 0;
  bool quiet = false;
  auto* search = app.add_subcommand("search", "Enumerate or sample gbent functions");
  search->add_option("--n", so.n, "Number of variables")->required();
  search->add_option("--k", so.k, "Modulus exponent")->required();
  search->add_option("--random", samples, "Sample this many random functions instead of enumerating");
  search->add_option("--seed", so.seed, "Seed for random mode");
  search->add_flag("-q,--quiet", quiet, "Only print the summary");
  search->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (wht->parsed()) return cmd_wht(in, hex, json);
    if (gwht->parsed()) return cmd_gwht(in, json);
    if (check->parsed()) return cmd_check(in, verbose, json);
    if (space->parsed()) return cmd_space(in, json);
    if (dual->parsed()) return cmd_dual(in);
    if (gray->parsed()) return cmd_gray(in, hex);
    if (zq->parsed()) return cmd_zq(in, json);
    if (rds->parsed()) return cmd_rds(in);
    if (mm->parsed()) return cmd_construct_mm(co);
    if (ex1->parsed()) {
      std::cout << gbent::format_gbf(gbent::example1({co.m, co.c}));
      return kOk;
    }
    if (spread->parsed()) return cmd_construct_spread(co);
    if (mes->parsed()) return cmd_construct_mesnager(co);
    if (transform->parsed()) return cmd_transform(in, to);
    if (lift->parsed()) return cmd_lift(in, r);
    if (search->parsed()) {
      if (samples > 0) {
        so.mode = gbent::SearchMode::Random;
        so.samples = samples;
      }
      return cmd_search(so, quiet, json);
    }
  } catch (const gbent::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
