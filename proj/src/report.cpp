#include "mulrec/report.hpp"

#include <fstream>
#include <sstream>

namespace mulrec {

namespace {

std::string fixed6(double x) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(6);
  os << x;
  return os.str();
}

json turn_dist_json(const TurnDist& d) {
  json j;
  j["exact"] = d.exact;
  if (d.exact) j["turn_distance"] = d.dq.str();
  j["gap"] = d.gap();
  return j;
}

json coloring_json(const ColoringSpec& spec) {
  json j;
  if (const auto* a = std::get_if<ArchimedeanSpec>(&spec)) {
    j["kind"] = "archimedean";
    j["alpha"] = a->alpha.str();
    j["beta"] = a->beta.str();
    j["cells"] = a->k;
  } else if (const auto* p = std::get_if<PAdicSpec>(&spec)) {
    j["kind"] = "padic";
    j["p"] = p->p.get_str();
    j["k"] = p->k;
    j["colors"] = color_count(spec).get_str();
  } else {
    const auto& q = std::get<ParitySpec>(spec);
    j["kind"] = "parity";
    j["p"] = q.p.get_str();
    j["k"] = q.k;
    j["colors"] = "2";
  }
  return j;
}

json witness_json(const CMFSpec& spec) {
  json j;
  j["description"] = describe(spec);
  return j;
}

}  // namespace

json to_json(const MoebiusParams& params) {
  json j;
  j["a"] = params.a.get_str();
  j["b"] = params.b.get_str();
  j["c"] = params.c.get_str();
  j["d"] = params.d.get_str();
  return j;
}

MoebiusParams params_from_json(const json& j) {
  return MoebiusParams(Int(j.at("a").get<std::string>()), Int(j.at("b").get<std::string>()),
                       Int(j.at("c").get<std::string>()), Int(j.at("d").get<std::string>()));
}

json to_json(const ReductionCert& cert) {
  json j;
  j["format"] = kFormatTag;
  j["type"] = "reduction-certificate";
  j["input"] = {{"a", cert.orig_a.get_str()},
                {"b", cert.orig_b.get_str()},
                {"d", cert.orig_d.get_str()}};
  j["normalized"] = {{"a", cert.a.get_str()},
                     {"b", cert.b.get_str()},
                     {"d", cert.d.get_str()},
                     {"g", cert.g.get_str()},
                     {"swapped", cert.swapped}};
  j["j"] = cert.j.get_str();
  j["k"] = cert.kBez.get_str();
  j["T"] = cert.T.get_str();
  j["A"] = cert.A.get_str();
  j["B"] = cert.B.get_str();
  j["J"] = cert.J.get_str();
  j["C"] = cert.C.get_str();
  j["D"] = cert.D.get_str();
  return j;
}

ReductionCert reduction_cert_from_json(const json& j) {
  const json& in = j.at("input");
  const json& nm = j.at("normalized");
  ReductionCert cert{Int(in.at("a").get<std::string>()),
                     Int(in.at("b").get<std::string>()),
                     Int(in.at("d").get<std::string>()),
                     Int(nm.at("a").get<std::string>()),
                     Int(nm.at("b").get<std::string>()),
                     Int(nm.at("d").get<std::string>()),
                     Int(nm.at("g").get<std::string>()),
                     nm.at("swapped").get<bool>(),
                     Int(j.at("j").get<std::string>()),
                     Int(j.at("k").get<std::string>()),
                     Int(j.at("T").get<std::string>()),
                     Int(j.at("A").get<std::string>()),
                     Int(j.at("B").get<std::string>()),
                     Int(j.at("J").get<std::string>()),
                     Int(j.at("C").get<std::string>()),
                     Int(j.at("D").get<std::string>())};
  return cert;
}

json to_json(const CliqueCert& cert) {
  json j;
  j["format"] = kFormatTag;
  j["type"] = "clique-certificate";
  j["params"] = to_json(cert.params);
  j["base"] = cert.base.get_str();
  json verts = json::array();
  for (const Int& v : cert.vertices) verts.push_back(v.get_str());
  j["vertices"] = verts;
  json pairs = json::array();
  for (const auto& pr : cert.pairs) {
    pairs.push_back({{"i", pr.i},
                     {"j", pr.j},
                     {"witness", pr.witness.get_str()},
                     {"orientation", pr.j_over_i ? "ji" : "ij"}});
  }
  j["pairs"] = pairs;
  if (!cert.levels.empty()) {
    json levels = json::array();
    for (const auto& lvl : cert.levels) {
      json l;
      l["k"] = lvl.k;
      l["window_length"] = lvl.window_len.get_str();
      l["factor_product"] = lvl.factor_product.get_str();
      l["residue"] = lvl.residue.get_str();
      l["step"] = lvl.step.get_str();
      l["factorial_step"] = lvl.factorial_step;
      l["placement"] = lvl.ell.get_str();
      json offs = json::array();
      for (const Int& o : lvl.offsets) offs.push_back(o.get_str());
      l["offsets"] = offs;
      levels.push_back(l);
    }
    j["levels"] = levels;
  }
  if (cert.reduction) j["reduction"] = to_json(*cert.reduction);
  return j;
}

CliqueCert clique_cert_from_json(const json& j) {
  CliqueCert cert{params_from_json(j.at("params")), {}, {}, Int(0), {}, std::nullopt};
  if (j.contains("base")) cert.base = Int(j.at("base").get<std::string>());
  for (const auto& v : j.at("vertices")) cert.vertices.emplace_back(v.get<std::string>());
  for (const auto& pr : j.at("pairs")) {
    cert.pairs.push_back({pr.at("i").get<std::size_t>(), pr.at("j").get<std::size_t>(),
                          Int(pr.at("witness").get<std::string>()),
                          pr.at("orientation").get<std::string>() == "ji"});
  }
  if (j.contains("reduction")) cert.reduction = reduction_cert_from_json(j.at("reduction"));
  return cert;
}

json to_json(const Classification& cls, const MoebiusParams& params) {
  json j;
  j["format"] = kFormatTag;
  j["type"] = "classification";
  j["params"] = to_json(params);
  j["verdict"] = verdict_name(cls.verdict);
  if (cls.reduction) j["reduction"] = to_json(*cls.reduction);
  if (cls.nr) {
    json nr;
    nr["case"] = case_name(cls.nr->case_info.kind);
    if (cls.nr->case_info.kind != WitnessCase::Archimedean) {
      nr["p"] = cls.nr->case_info.p.get_str();
      nr["k"] = cls.nr->case_info.k;
    }
    nr["chromatic_upper_bound"] = cls.nr->chromatic_upper_bound.get_str();
    nr["coloring"] = coloring_json(cls.nr->coloring);
    nr["witness"] = witness_json(cls.nr->witness);
    j["certificate"] = nr;
  }
  return j;
}

json to_json(const DioReport& rep, const MoebiusParams& params) {
  json j;
  j["format"] = kFormatTag;
  j["type"] = "dio-scan";
  j["params"] = to_json(params);
  j["witness"] = rep.witness;
  j["lo"] = rep.lo;
  j["N"] = rep.N;
  j["valid_count"] = rep.valid_count;
  j["min"] = turn_dist_json(rep.min_dist);
  j["argmin"] = rep.argmin;
  j["tail_min"] = turn_dist_json(rep.tail_min_dist);
  j["tail_argmin"] = rep.tail_argmin;
  return j;
}

json to_json(const AsetReport& rep, const MoebiusParams& params) {
  json j;
  j["format"] = kFormatTag;
  j["type"] = "aset-scan";
  j["params"] = to_json(params);
  j["witnesses"] = rep.witnesses;
  j["eps"] = rep.eps;
  j["N"] = rep.N;
  j["count"] = rep.count;
  j["density"] = rep.density;
  j["block_counts"] = rep.block_counts;
  j["cell_count"] = rep.cell_count;
  if (!rep.symbolic_lower_bound.empty()) j["symbolic_lower_bound"] = rep.symbolic_lower_bound;
  return j;
}

json to_json(const ColoringCheck& check, const WindowGraph& g, const ColoringSpec& spec) {
  json j;
  j["format"] = kFormatTag;
  j["type"] = "coloring-check";
  j["params"] = to_json(g.params());
  j["window"] = {g.lo(), g.hi()};
  j["coloring"] = coloring_json(spec);
  j["edges"] = g.edges().size();
  j["violations"] = check.violations.size();
  j["ambiguous_vertices"] = check.ambiguous_vertices;
  json viol = json::array();
  std::size_t cap = std::min<std::size_t>(check.violations.size(), 100);
  for (std::size_t i = 0; i < cap; ++i) {
    const auto& e = check.violations[i];
    viol.push_back({e.u, e.v, e.witness});
  }
  j["violation_sample"] = viol;
  return j;
}

std::string render_text(const Classification& cls, const MoebiusParams& params) {
  std::ostringstream os;
  os << "params: " << params.str() << "\n";
  os << "verdict: " << verdict_name(cls.verdict) << "\n";
  if (cls.reduction) {
    const auto& r = *cls.reduction;
    os << "reduction: g=" << r.g.get_str() << " swapped=" << (r.swapped ? "yes" : "no")
       << " j=" << r.j.get_str() << " k=" << r.kBez.get_str() << " T=" << r.T.get_str()
       << " B=" << r.B.get_str() << " A=" << r.A.get_str() << " J=" << r.J.get_str()
       << " C=" << r.C.get_str() << " D=" << r.D.get_str() << "\n";
    os << "identity: (a n + b)/(a n + d) = (A m + B)/(A m + B-1) at n = C m + D, checked m=1..100\n";
  }
  if (cls.nr) {
    os << "case: (" << case_name(cls.nr->case_info.kind) << ")\n";
    if (cls.nr->case_info.kind != WitnessCase::Archimedean) {
      os << "p: " << cls.nr->case_info.p.get_str() << "\n";
      os << "k: " << cls.nr->case_info.k << "\n";
    }
    os << "chromatic_upper_bound: " << cls.nr->chromatic_upper_bound.get_str() << "\n";
    os << "coloring: " << describe(cls.nr->coloring) << "\n";
    os << "witness: " << describe(cls.nr->witness) << "\n";
  }
  return os.str();
}

std::string render_text(const DioReport& rep, const MoebiusParams& params) {
  std::ostringstream os;
  os << "params: " << params.str() << "\n";
  os << "witness: " << rep.witness << "\n";
  os << "range: [" << rep.lo << ", " << rep.N << "], valid n: " << rep.valid_count << "\n";
  os << "min gap = " << fixed6(rep.min_dist.gap());
  if (rep.min_dist.exact) os << " (exact; turn distance " << rep.min_dist.dq.str() << ")";
  os << " at n = " << rep.argmin << "\n";
  os << "tail min gap = " << fixed6(rep.tail_min_dist.gap());
  if (rep.tail_min_dist.exact) {
    os << " (exact; turn distance " << rep.tail_min_dist.dq.str() << ")";
  }
  os << " at n = " << rep.tail_argmin << "\n";
  return os.str();
}

std::string render_text(const AsetReport& rep, const MoebiusParams& params) {
  std::ostringstream os;
  os << "params: " << params.str() << "\n";
  for (const auto& w : rep.witnesses) os << "witness: " << w << "\n";
  os << "eps: " << fixed6(rep.eps) << "\n";
  os << "N: " << rep.N << "\n";
  os << "count: " << rep.count << "\n";
  os << "density: " << fixed6(rep.density) << "\n";
  os << "block counts:";
  for (auto c : rep.block_counts) os << ' ' << c;
  os << "\n";
  if (!rep.symbolic_lower_bound.empty()) {
    os << "provable bound (symbolic): " << rep.symbolic_lower_bound << "\n";
  }
  return os.str();
}

std::string render_text(const CliqueCert& cert) {
  std::ostringstream os;
  os << "params: " << cert.params.str() << "\n";
  os << "clique size: " << cert.vertices.size() << "\n";
  for (const Int& v : cert.vertices) {
    std::string s = v.get_str();
    os << "vertex (" << s.size() << " digits): ";
    if (s.size() <= 80) {
      os << s;
    } else {
      os << s.substr(0, 40) << "..." << s.substr(s.size() - 40);
    }
    os << "\n";
  }
  os << "pairs verified: " << cert.pairs.size() << "\n";
  return os.str();
}

std::string render_text(const ColoringCheck& check, const WindowGraph& g,
                        const ColoringSpec& spec) {
  std::ostringstream os;
  os << "params: " << g.params().str() << "\n";
  os << "window: [" << g.lo() << ", " << g.hi() << "]\n";
  os << "coloring: " << describe(spec) << "\n";
  os << check.violations.size() << " violations / " << g.edges().size() << " edges\n";
  os << "ambiguous vertices: " << check.ambiguous_vertices << "\n";
  return os.str();
}

VerifyOutcome verify_certificate(const json& j) {
  try {
    if (!j.contains("format") || j.at("format").get<std::string>() != kFormatTag) {
      return {false, "unknown format tag"};
    }
    std::string type = j.at("type").get<std::string>();
    if (type == "clique-certificate") {
      CliqueCert cert = clique_cert_from_json(j);
      verify_clique_cert(cert);
      if (cert.reduction) verify_reduction_cert(*cert.reduction);
      return {true, "clique certificate verified: " + std::to_string(cert.vertices.size()) +
                        " vertices, " + std::to_string(cert.pairs.size()) + " pairs"};
    }
    if (type == "reduction-certificate") {
      ReductionCert cert = reduction_cert_from_json(j);
      verify_reduction_cert(cert);
      return {true, "reduction certificate verified"};
    }
    if (type == "classification") {
      if (j.contains("reduction")) {
        ReductionCert cert = reduction_cert_from_json(j.at("reduction"));
        verify_reduction_cert(cert);
        return {true, "classification reduction verified"};
      }
      return {true, "classification carries no re-checkable payload"};
    }
    return {false, "unknown certificate type: " + type};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

VerifyOutcome verify_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {false, "cannot open " + path};
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    return {false, std::string("parse error: ") + e.what()};
  }
  return verify_certificate(j);
}

}  // namespace mulrec
