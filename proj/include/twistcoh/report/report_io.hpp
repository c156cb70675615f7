#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "twistcoh/report/pipeline.hpp"

namespace twistcoh {

namespace detail {

inline nlohmann::ordered_json big_to_json(const BigInt& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return nlohmann::ordered_json(static_cast<long long>(v.get_si()));
  return nlohmann::ordered_json(v.get_str());
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace detail

/// Stable JSON layout; field order is fixed. Integers beyond 64 bits are
/// emitted as decimal strings.
inline nlohmann::ordered_json to_json(const TwistReport& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["input"] = json{{"type", std::string(1, r.input.cartan_type.family)},
                    {"rank", r.input.cartan_type.rank},
                    {"automorphism", r.input.automorphism.to_string()},
                    {"truncation", r.input.truncation},
                    {"check", r.input.run_oracle}};
  j["folded_type"] = r.folded_type.to_string();
  j["orbit_criterion"] = json{{"orbits", r.orbit_criterion.orbit_count},
                              {"folded_roots", r.orbit_criterion.folded_root_count},
                              {"holds", r.orbit_criterion.holds},
                              {"positive_orbit_sizes", r.positive_orbit_sizes}};
  j["wsigma"] = json{{"order", detail::big_to_json(r.wsigma_order)},
                     {"restricted_order", detail::big_to_json(r.restricted_order)},
                     {"preserves_folded", r.wsigma_preserves_folded}};
  json series = json::array();
  for (const auto& c : r.series.coefficients()) series.push_back(detail::big_to_json(c));
  j["series"] = std::move(series);
  if (r.closed_form)
    j["closed_form"] = json{{"x_degrees", r.closed_form->x_degrees()}, {"y_degrees", r.closed_form->y_degrees()}};
  else
    j["closed_form"] = nullptr;
  j["excluded_characteristics"] = r.excluded_characteristics;
  if (r.oracle)
    j["oracle"] = json{{"max_degree", r.oracle->max_degree}, {"agrees", r.oracle->agrees}};
  else
    j["oracle"] = nullptr;
  j["notes"] = r.notes;
  return j;
}

inline std::string to_json_string(const TwistReport& r) { return to_json(r).dump(2) + "\n"; }

inline std::string to_text(const TwistReport& r) {
  std::ostringstream os;
  os << "type:                     " << r.input.cartan_type.to_string() << "\n";
  os << "automorphism:             " << r.input.automorphism.to_string() << "\n";
  os << "truncation:               " << r.input.truncation << "\n";
  os << "folded type:              " << r.folded_type.to_string() << "\n";
  os << "fixed group:              " << r.fixed_group_note << "\n";
  os << "sigma-orbits on roots:    " << r.orbit_criterion.orbit_count << " (folded roots "
     << r.orbit_criterion.folded_root_count << ", criterion " << (r.orbit_criterion.holds ? "holds" : "inconclusive")
     << ")\n";
  os << "positive orbit sizes:     " << detail::join(r.positive_orbit_sizes) << "\n";
  os << "|W_sigma|:                " << r.wsigma_order.get_str() << "\n";
  os << "|W_sigma on t^sigma|:     " << r.restricted_order.get_str() << "\n";
  os << "preserves folded roots:   " << (r.wsigma_preserves_folded ? "yes" : "no") << "\n";
  os << "series:                   " << to_string(r.series) << " + O(u^" << r.series.truncation() + 1 << ")\n";
  os << "closed form:              " << (r.closed_form ? r.closed_form->to_string() : "not recognized") << "\n";
  os << "excluded characteristics:";
  for (auto p : r.excluded_characteristics) os << " " << p;
  os << "\n";
  if (r.oracle)
    os << "oracle:                   " << (r.oracle->agrees ? "agrees" : "DISAGREES") << " through degree "
       << r.oracle->max_degree << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace twistcoh
