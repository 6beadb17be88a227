#include <CLI11.hpp>

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mulrec/classify.hpp"
#include "mulrec/report.hpp"

namespace {

using namespace mulrec;

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerify = 4;

struct GlobalOpts {
  RunConfig cfg;
  std::string format = "text";
  std::string out;
};

void apply_config_file(RunConfig& cfg) {
  const char* path = std::getenv("MULREC_CONFIG");
  if (path == nullptr || *path == '\0') return;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(std::string("config file not readable: ") + path);
  json j;
  in >> j;
  if (j.contains("precision_bits")) cfg.precision_bits = j["precision_bits"].get<long>();
  if (j.contains("precision_max_bits")) cfg.precision_max_bits = j["precision_max_bits"].get<long>();
  if (j.contains("factorial_cap")) cfg.factorial_cap = j["factorial_cap"].get<unsigned long>();
  if (j.contains("clique_level_cap")) cfg.clique_level_cap = j["clique_level_cap"].get<int>();
  if (j.contains("window_cap")) cfg.window_cap = j["window_cap"].get<std::int64_t>();
  if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
}

void emit(const GlobalOpts& g, const std::string& text, const json& j) {
  std::string payload = g.format == "json" ? j.dump(2) + "\n" : text;
  if (g.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(g.out);
    if (!out) throw std::invalid_argument("cannot write " + g.out);
    out << payload;
  }
}

CMFSpec parse_witness(const std::string& s, const MoebiusParams& params,
                      const RunConfig& cfg) {
  if (s == "auto") {
    Classification cls = classify(params, cfg);
    if (cls.verdict != Verdict::NonRecurrent) {
      throw std::invalid_argument("witness auto: parameters are not non-recurrent");
    }
    return cls.nr->witness;
  }
  if (s == "one") return CustomSpec{{}, Rat(0)};
  auto split = [](const std::string& str, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= str.size()) {
      std::size_t next = str.find(sep, pos);
      if (next == std::string::npos) {
        parts.push_back(str.substr(pos));
        break;
      }
      parts.push_back(str.substr(pos, next - pos));
      pos = next + 1;
    }
    return parts;
  };
  auto parts = split(s, ':');
  if (parts[0] == "archchar" && parts.size() == 2) {
    return ArchCharSpec::plain(std::stod(parts[1]));
  }
  if (parts[0] == "rootchar" && parts.size() == 3) {
    return RootCharSpec{std::stoll(parts[1]), std::stol(parts[2])};
  }
  if (parts[0] == "dirichlet" && (parts.size() == 3 || parts.size() == 4)) {
    long idx = parts.size() == 4 ? std::stol(parts[3]) : 1;
    return ModDirichletSpec{std::stoll(parts[1]), std::stol(parts[2]), idx};
  }
  throw std::invalid_argument("unknown witness spec: " + s +
                              " (expected auto|one|archchar:t|rootchar:p:k|dirichlet:p:k[:index])");
}

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) throw std::invalid_argument("window must be lo..hi");
  return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
}

int run(int argc, char** argv) {
  CLI::App app{"multiplicative recurrence of Moebius ratio sets: classification, colorings, cliques, scans"};
  app.require_subcommand(1);

  GlobalOpts g;
  apply_config_file(g.cfg);
  app.add_option("--precision-bits", g.cfg.precision_bits, "working precision for real colorings");
  app.add_option("--factorial-cap", g.cfg.factorial_cap, "largest permitted factorial argument");
  app.add_option("--workers", g.cfg.workers, "OpenMP thread count (0 = default)");
  app.add_option("--format", g.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out, "write the report to a file instead of stdout");

  // classify a b c d
  std::vector<std::string> cl_args;
  auto* cmd_classify = app.add_subcommand("classify", "decide recurrence and print the certificate");
  cmd_classify->fallthrough();
  cmd_classify->add_option("params", cl_args, "a b c d")->expected(4);

  // color-check a b c d --N
  std::vector<std::string> cc_args;
  std::int64_t cc_N = 100000;
  auto* cmd_color = app.add_subcommand("color-check", "verify the derived proper coloring on [1, N]");
  cmd_color->fallthrough();
  cmd_color->add_option("params", cc_args, "a b c d")->expected(4);
  cmd_color->add_option("--N", cc_N, "window upper end");

  // clique construct a b d --k --base  /  clique search a b c d --window --limit
  auto* cmd_clique = app.add_subcommand("clique", "clique construction and search");
  cmd_clique->fallthrough();
  cmd_clique->require_subcommand(1);
  std::vector<std::string> kc_args;
  int kc_k = 2;
  std::string kc_base = "0";
  auto* cmd_construct = cmd_clique->add_subcommand("construct", "build a verified k-clique certificate");
  cmd_construct->fallthrough();
  cmd_construct->add_option("params", kc_args, "a b d (equal leading coefficients)")->expected(3);
  cmd_construct->add_option("--k", kc_k, "clique size");
  cmd_construct->add_option("--base", kc_base, "all vertices must exceed this bound");
  std::vector<std::string> ks_args;
  std::string ks_window = "1..1000";
  std::size_t ks_limit = 0;
  auto* cmd_search = cmd_clique->add_subcommand("search", "exact maximum cliques on a window");
  cmd_search->fallthrough();
  cmd_search->add_option("params", ks_args, "a b c d")->expected(4);
  cmd_search->add_option("--window", ks_window, "lo..hi");
  cmd_search->add_option("--limit", ks_limit, "stop at the first clique of this size");

  // scan dio / scan aset
  auto* cmd_scan = app.add_subcommand("scan", "Diophantine gap and density scans");
  cmd_scan->fallthrough();
  cmd_scan->require_subcommand(1);
  std::vector<std::string> sd_args;
  std::string sd_witness = "auto";
  std::int64_t sd_N = 100000;
  auto* cmd_dio = cmd_scan->add_subcommand("dio", "minimum |f(an+b) - f(cn+d)| over n <= N");
  cmd_dio->fallthrough();
  cmd_dio->add_option("params", sd_args, "a b c d")->expected(4);
  cmd_dio->add_option("--witness", sd_witness, "auto|one|archchar:t|rootchar:p:k|dirichlet:p:k[:index]");
  cmd_dio->add_option("--N", sd_N, "scan bound");
  std::vector<std::string> sa_args;
  std::vector<std::string> sa_fs{"auto"};
  double sa_eps = 0.1;
  std::int64_t sa_N = 10000;
  auto* cmd_aset = cmd_scan->add_subcommand("aset", "density of the near-invariance set");
  cmd_aset->fallthrough();
  cmd_aset->add_option("params", sa_args, "a b c d")->expected(4);
  cmd_aset->add_option("--fs", sa_fs, "witness specs (repeatable)");
  cmd_aset->add_option("--eps", sa_eps, "gap threshold");
  cmd_aset->add_option("--N", sa_N, "scan bound");

  // verify <file>
  std::string vf_path;
  auto* cmd_verify = app.add_subcommand("verify", "re-verify a certificate file");
  cmd_verify->fallthrough();
  cmd_verify->add_option("file", vf_path, "certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (g.cfg.workers > 0) omp_set_num_threads(g.cfg.workers);

  auto params_of = [](const std::vector<std::string>& v) {
    return MoebiusParams(Int(v[0]), Int(v[1]), Int(v[2]), Int(v[3]));
  };

  if (cmd_classify->parsed()) {
    MoebiusParams params = params_of(cl_args);
    Classification cls = classify(params, g.cfg);
    emit(g, render_text(cls, params), to_json(cls, params));
    return 0;
  }

  if (cmd_color->parsed()) {
    MoebiusParams params = params_of(cc_args);
    Classification cls = classify(params, g.cfg);
    if (cls.verdict != Verdict::NonRecurrent) {
      throw std::invalid_argument("color-check: parameters are not non-recurrent (verdict " +
                                  verdict_name(cls.verdict) + ")");
    }
    WindowGraph graph = build_window(params, 1, cc_N, g.cfg);
    ColoringCheck check = verify_coloring(graph, cls.nr->coloring, g.cfg);
    emit(g, render_text(check, graph, cls.nr->coloring), to_json(check, graph, cls.nr->coloring));
    if (!check.violations.empty() || check.ambiguous_vertices > 0) return kExitVerify;
    return 0;
  }

  if (cmd_construct->parsed()) {
    CliqueCert cert = big_clique(Int(kc_args[0]), Int(kc_args[1]), Int(kc_args[2]), kc_k,
                                 g.cfg, Int(kc_base));
    emit(g, render_text(cert) + "verified: yes\n", to_json(cert));
    return 0;
  }

  if (cmd_search->parsed()) {
    MoebiusParams params = params_of(ks_args);
    auto [lo, hi] = parse_window(ks_window);
    WindowGraph graph = build_window(params, lo, hi, g.cfg);
    CliqueSearchResult res = max_cliques(graph, ks_limit);
    json j;
    j["format"] = kFormatTag;
    j["type"] = "clique-search";
    j["params"] = to_json(params);
    j["window"] = {lo, hi};
    j["omega"] = res.omega;
    std::ostringstream os;
    os << "params: " << params.str() << "\n";
    os << "window: [" << lo << ", " << hi << "]\n";
    os << "omega: " << res.omega << "\n";
    json cliques = json::array();
    std::size_t shown = 0;
    for (const auto& c : res.cliques) {
      if (++shown > 20) break;
      json one = json::array();
      os << "clique:";
      for (auto v : c) {
        os << ' ' << v;
        one.push_back(v);
      }
      os << "\n";
      cliques.push_back(one);
    }
    j["cliques"] = cliques;
    emit(g, os.str(), j);
    return 0;
  }

  if (cmd_dio->parsed()) {
    MoebiusParams params = params_of(sd_args);
    CMFSpec spec = parse_witness(sd_witness, params, g.cfg);
    DioReport rep = dio_scan(spec, params, sd_N, g.cfg);
    emit(g, render_text(rep, params), to_json(rep, params));
    return 0;
  }

  if (cmd_aset->parsed()) {
    MoebiusParams params = params_of(sa_args);
    std::vector<CMFSpec> specs;
    for (const auto& s : sa_fs) specs.push_back(parse_witness(s, params, g.cfg));
    AsetReport rep = aset_scan(specs, sa_eps, params, sa_N, g.cfg);
    emit(g, render_text(rep, params), to_json(rep, params));
    return 0;
  }

  if (cmd_verify->parsed()) {
    VerifyOutcome out = verify_certificate_file(vf_path);
    std::cout << (out.ok ? "OK: " : "FAIL: ") << out.message << "\n";
    return out.ok ? 0 : kExitVerify;
  }

  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mulrec::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const mulrec::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
