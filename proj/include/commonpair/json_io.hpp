#pragma once

#include <json.hpp>

#include <string>

#include "commonpair/certificate.hpp"
#include "commonpair/expansion.hpp"
#include "commonpair/graph.hpp"
#include "commonpair/kernel.hpp"

namespace commonpair {

// Insertion-ordered JSON keeps all CLI output byte-deterministic.
using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);  // {"n":..,"edges":[[u,v],..]} or "K5"

// Shorthand name, inline JSON object (leading '{'), or @path to a file.
Graph parse_graph_spec(const std::string& spec);

// Canonical-form key "g<n>:0x<hex>", stable across labellings.
std::string graph_key(const Graph& g);

Json kernel_to_json(const StepKernel& u);
StepKernel kernel_from_json(const Json& j);
StepKernel load_kernel(const std::string& path);

Json system_to_json(const ColourSystem& sys);
ColourSystem system_from_json(const Json& j);
ColourSystem load_system(const std::string& path);

Json witness_to_json(const WitnessReport& report);
Json candidate_to_json(const CandidateP& candidate);
Json verification_to_json(const VerificationReport& report);
Json class_table_to_json(const GraphClassTable& table);
Json gluing_table_to_json();

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);
Json float_certificate_to_json(const FloatCertificate& fc);
FloatCertificate float_certificate_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const Json& j, const std::string& path);

}  // namespace commonpair
