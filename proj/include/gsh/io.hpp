#pragma once

#include <filesystem>
#include <json.hpp>

#include "gsh/caratheodory.hpp"
#include "gsh/extremal.hpp"
#include "gsh/function.hpp"
#include "gsh/growth.hpp"
#include "gsh/membership.hpp"
#include "gsh/subordination.hpp"

namespace nlohmann {
template <>
struct adl_serializer<std::complex<double>> {
  static void to_json(json& j, const std::complex<double>& z) { j = json::array({z.real(), z.imag()}); }
  static void from_json(const json& j, std::complex<double>& z);
};
}  // namespace nlohmann

namespace gsh {

using json = nlohmann::json;

void to_json(json& j, const TruncatedSeries& s);
void to_json(json& j, const HerglotzSample& k);
void to_json(json& j, const SchwarzSample& w);
void to_json(json& j, const LcPoint& p);
void to_json(json& j, const NormalizedFunction& f);
void to_json(json& j, const SufficientResult& r);
void to_json(json& j, const KernelResult& r);
void to_json(json& j, const GeometricResult& r);
void to_json(json& j, const MembershipReport& r);
void to_json(json& j, const BoundEstimate& b);
void to_json(json& j, const LemmaSuiteReport& r);
void to_json(json& j, const GrowthRecord& g);
void to_json(json& j, const HarnessSummary& s);
void to_json(json& j, const HarnessReport& r);

json witness_json(const Witness& w);

TruncatedSeries series_from_json(const json& j);
HerglotzSample herglotz_from_json(const json& j);
SchwarzSample schwarz_from_json(const json& j);

/// Accepts {coeffs}, {rotation, zeros} or {weights, nodes}; witnesses are
/// turned into members at the given order.
NormalizedFunction function_from_json(const json& j, int order);

/// Reads and parses a JSON file. Throws Error(Parse) with the path on failure.
json read_json_file(const std::filesystem::path& path);

}  // namespace gsh
