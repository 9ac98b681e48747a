#include "gsh/io.hpp"

#include <fstream>
#include <sstream>

#include "gsh/error.hpp"

void nlohmann::adl_serializer<std::complex<double>>::from_json(const json& j, std::complex<double>& z) {
  if (j.is_number()) {
    z = {j.get<double>(), 0.0};
    return;
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw gsh::Error(gsh::ErrorCode::Parse, "complex number must be [re, im], got " + j.dump());
  z = {j[0].get<double>(), j[1].get<double>()};
}

namespace gsh {

namespace {

template <class Fn>
auto parsing(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string(what) + ": " + e.what());
  }
}

std::vector<cplx> complex_list(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected an array of [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(e.get<cplx>());
  return out;
}

}  // namespace

void to_json(json& j, const TruncatedSeries& s) {
  j = json::array();
  for (cplx c : s.coeffs()) j.push_back(c);
}

void to_json(json& j, const HerglotzSample& k) { j = {{"weights", k.weights}, {"nodes", k.nodes}}; }

void to_json(json& j, const SchwarzSample& w) { j = {{"rotation", w.rotation}, {"zeros", w.zeros}}; }

void to_json(json& j, const LcPoint& p) { j = {{"c", p.c}, {"x", p.x}, {"z", p.z}}; }

void to_json(json& j, const NormalizedFunction& f) { j = {{"coeffs", f.series()}}; }

void to_json(json& j, const SufficientResult& r) {
  j = {{"holds", r.holds}, {"sup_statistic", r.sup_statistic}, {"argmax_theta", r.argmax_theta}};
}

void to_json(json& j, const KernelResult& r) {
  j = {{"nonvanishing", r.nonvanishing}, {"min_modulus", r.min_modulus}, {"argmin_theta", r.argmin_theta},
       {"argmin_z", r.argmin_z}, {"min_f_over_z", r.min_f_over_z}};
}

void to_json(json& j, const GeometricResult& r) {
  j = {{"member", r.member},           {"boundary_ambiguity", r.boundary_ambiguity},
       {"max_excursion", r.max_excursion}, {"argmax_z", r.argmax_z},
       {"max_abs_g", r.max_abs_g},     {"tail_estimate", r.tail_estimate},
       {"near_threshold", r.near_threshold}};
}

void to_json(json& j, const MembershipReport& r) {
  j = {{"verdict", to_string(r.combined)},
       {"sufficient", r.sufficient},
       {"kernel", r.kernel},
       {"geometric", r.geometric}};
}

json witness_json(const Witness& w) {
  json j = {{"family", family_name(w)}};
  std::visit([&](const auto& v) { j["value"] = v; }, w);
  return j;
}

void to_json(json& j, const BoundEstimate& b) {
  j = {{"functional", b.functional},   {"empirical_max", b.empirical_max}, {"claimed_bound", b.claimed_bound},
       {"attained_ratio", b.attained_ratio}, {"violation", b.violation},  {"tolerance", b.tolerance},
       {"order", b.order},             {"evaluated", b.evaluated},         {"witness", witness_json(b.witness)}};
}

void to_json(json& j, const LemmaSuiteReport& r) {
  j = {{"samples", r.samples},
       {"cn_violations", r.cn_violations},
       {"fs_complex_violations", r.fs_complex_violations},
       {"fs_real_violations", r.fs_real_violations},
       {"lj_violations", r.lj_violations},
       {"la_violations", r.la_violations},
       {"la_condition_hits", r.la_condition_hits},
       {"lc_invalid", r.lc_invalid},
       {"lc_degenerate", r.lc_degenerate},
       {"max_cn", r.max_cn},
       {"max_lj_ratio", r.max_lj_ratio},
       {"max_la_value", r.max_la_value},
       {"max_witness_modulus", r.max_witness_modulus},
       {"total_violations", r.total_violations()}};
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    j["first_violation"] = {{"index", v.index}, {"check", v.check}, {"sample", v.sample},
                            {"value", v.value}, {"bound", v.bound}};
  } else {
    j["first_violation"] = nullptr;
  }
}

void to_json(json& j, const GrowthRecord& g) {
  j = {{"r", g.r},
       {"lower", g.lower},
       {"upper", g.upper},
       {"deriv_bound", g.deriv_bound},
       {"covering", g.covering},
       {"shi_series", g.shi_series},
       {"shi_quadrature", g.shi_quadrature}};
}

void to_json(json& j, const HarnessSummary& s) {
  j = {{"kind", to_string(s.kind)},
       {"A", s.janowski.A},
       {"B", s.janowski.B},
       {"threshold", s.threshold ? json(*s.threshold) : json(nullptr)},
       {"alpha", s.alpha},
       {"cases", s.cases},
       {"non_vacuous", s.non_vacuous},
       {"counterexamples", s.counterexamples},
       {"sqrt_counterexamples", s.sqrt_counterexamples},
       {"b_sign_flag", s.b_sign_flag}};
}

void to_json(json& j, const HarnessReport& r) {
  json cases = json::array();
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& rec = r.records[i];
    cases.push_back({{"kind", to_string(rec.kind)},
                     {"A", rec.janowski.A},
                     {"B", rec.janowski.B},
                     {"alpha", rec.alpha},
                     {"function", {{"coeffs", r.functions[i]}}},
                     {"scale", rec.scale},
                     {"deviation", rec.deviation},
                     {"premise_holds", rec.premise_holds},
                     {"conclusion_holds", rec.conclusion_holds},
                     {"conclusion_sqrt_holds", rec.conclusion_sqrt_holds},
                     {"vacuous", rec.vacuous}});
  }
  j = {{"summary", r.summaries}, {"counterexamples", r.counterexamples()}, {"cases", std::move(cases)}};
}

TruncatedSeries series_from_json(const json& j) {
  return parsing("series", [&] { return TruncatedSeries(complex_list(j)); });
}

HerglotzSample herglotz_from_json(const json& j) {
  return parsing("Herglotz sample", [&] {
    HerglotzSample k{j.at("weights").get<std::vector<double>>(), complex_list(j.at("nodes"))};
    k.validate();
    return k;
  });
}

SchwarzSample schwarz_from_json(const json& j) {
  return parsing("Schwarz sample", [&] {
    SchwarzSample w{j.at("rotation").get<cplx>(), complex_list(j.at("zeros"))};
    w.validate();
    return w;
  });
}

NormalizedFunction function_from_json(const json& j, int order) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "function input must be a JSON object");
  if (j.contains("coeffs")) return NormalizedFunction(series_from_json(j.at("coeffs")));
  if (j.contains("rotation")) return member_from_witness(schwarz_from_json(j), order);
  if (j.contains("weights")) return member_from_caratheodory(herglotz_from_json(j), order);
  throw Error(ErrorCode::Parse, "input needs one of: coeffs, rotation+zeros, weights+nodes");
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

}  // namespace gsh
