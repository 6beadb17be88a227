#pragma once

#include <json.hpp>

#include <string>

#include "mulrec/classify.hpp"
#include "mulrec/cliques.hpp"
#include "mulrec/graph.hpp"
#include "mulrec/multfun.hpp"

namespace mulrec {

inline constexpr const char* kFormatTag = "mulrec/1";

using json = nlohmann::json;

json to_json(const MoebiusParams& params);
json to_json(const ReductionCert& cert);
json to_json(const CliqueCert& cert);
json to_json(const Classification& cls, const MoebiusParams& params);
json to_json(const DioReport& rep, const MoebiusParams& params);
json to_json(const AsetReport& rep, const MoebiusParams& params);
json to_json(const ColoringCheck& check, const WindowGraph& g, const ColoringSpec& spec);

MoebiusParams params_from_json(const json& j);
CliqueCert clique_cert_from_json(const json& j);
ReductionCert reduction_cert_from_json(const json& j);

// Deterministic line-oriented summaries.
std::string render_text(const Classification& cls, const MoebiusParams& params);
std::string render_text(const DioReport& rep, const MoebiusParams& params);
std::string render_text(const AsetReport& rep, const MoebiusParams& params);
std::string render_text(const CliqueCert& cert);
std::string render_text(const ColoringCheck& check, const WindowGraph& g,
                        const ColoringSpec& spec);

struct VerifyOutcome {
  bool ok;
  std::string message;
};

// Re-verifies a serialized certificate (clique or reduction) from scratch.
VerifyOutcome verify_certificate(const json& j);
VerifyOutcome verify_certificate_file(const std::string& path);

}  // namespace mulrec
