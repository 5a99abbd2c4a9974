#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tvb/analysis.hpp"
#include "tvb/cohomology.hpp"
#include "tvb/positivity.hpp"

namespace tvb {

// A named bundle description as stored on disk. Rays and cones are 1-indexed
// in the file and 0-indexed in memory.
struct BundleFile {
    std::optional<std::string> name;
    ToricBundle bundle;
};

BundleFile parse_bundle_file(const std::string& text);
BundleFile load_bundle_file(const std::string& path);

// Canonical serialization; parse(serialize(x)) reproduces x exactly.
std::string serialize_bundle_file(const BundleFile& bf);

// Command output with two byte-deterministic renderings.
struct Report {
    std::string command;
    nlohmann::ordered_json body;

    std::string to_json() const;
    std::string to_text() const;
};

Report validation_report(const BundleFile& bf, int* exit_code);
Report full_report(const BundleFile& bf, const BundleAnalysis& a);
Report parliament_report(const BundleFile& bf, const BundleAnalysis& a);
Report sections_report(const BundleFile& bf, const BundleAnalysis& a);
Report positivity_command_report(const BundleFile& bf, const BundleAnalysis& a,
                                 const std::vector<long long>& jet_orders);
Report restrict_report(const BundleFile& bf, const BundleAnalysis& a);
Report cohomology_character_report(const BundleFile& bf, const IntVec& u);
Report euler_report(const BundleFile& bf);

nlohmann::ordered_json json_qvec(const QVec& v);
nlohmann::ordered_json json_positivity(const PositivityReport& r);

}  // namespace tvb
