#pragma once

// Serializable report types used by the CLI: the full geometry report and
// per-kappa band records, with lossless JSON round-tripping.

#include <string>

#include <json.hpp>

#include "swcnt/geometry.hpp"
#include "swcnt/reciprocal.hpp"

namespace swcnt {

struct GeometryReport {
  int n = 0, m = 0;
  double a = 0.0;
  int n_cells = 0;
  std::string symmetry_class;
  TubeGeometry geom;
  CharacteristicVectors vectors;
  ReciprocalTube reciprocal;
  double a_star_plus = 0.0;   // chord_plus / a
  double a_star_minus = 0.0;  // chord_minus / a

  friend bool operator==(const GeometryReport&, const GeometryReport&) = default;
};

inline bool operator==(const TubeGeometry& x, const TubeGeometry& y) {
  return x.n == y.n && x.m == y.m && x.a == y.a && x.sym == y.sym && x.r_t == y.r_t &&
         x.theta_plus == y.theta_plus && x.theta_minus == y.theta_minus &&
         x.alpha_plus == y.alpha_plus && x.alpha_minus == y.alpha_minus &&
         x.c_plus == y.c_plus && x.c_minus == y.c_minus && x.chord_plus == y.chord_plus &&
         x.chord_minus == y.chord_minus && x.ch_len == y.ch_len && x.t_len == y.t_len &&
         x.t1 == y.t1 && x.t2 == y.t2 && x.d == y.d && x.d_R == y.d_R &&
         x.n_cells == y.n_cells && x.L == y.L;
}

inline bool operator==(const CharacteristicVectors& x, const CharacteristicVectors& y) {
  return x.a_hat_plus == y.a_hat_plus && x.a_hat_minus == y.a_hat_minus;
}

inline bool operator==(const ReciprocalTube& x, const ReciprocalTube& y) {
  return x.r_tilde == y.r_tilde && x.b_tilde_plus == y.b_tilde_plus &&
         x.b_tilde_minus == y.b_tilde_minus && x.b_prime_plus == y.b_prime_plus &&
         x.b_prime_minus == y.b_prime_minus && x.b_dprime_plus == y.b_dprime_plus &&
         x.b_dprime_minus == y.b_dprime_minus && x.a_tilde == y.a_tilde;
}

inline GeometryReport build_geometry_report(const ChiralSpec& spec, int n_cells = 0) {
  if (n_cells == 0) n_cells = cell_count_multiple(spec);
  GeometryReport r;
  r.geom = compute_geometry(spec, n_cells);
  r.n = r.geom.n;
  r.m = r.geom.m;
  r.a = r.geom.a;
  r.n_cells = n_cells;
  r.symmetry_class = to_string(r.geom.sym);
  r.vectors = characteristic_vectors(r.geom);
  r.reciprocal = reciprocal_tube(r.geom);
  r.a_star_plus = r.geom.chord_plus / r.geom.a;
  r.a_star_minus = r.geom.chord_minus / r.geom.a;
  return r;
}

inline nlohmann::json to_json(const GeometryReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["a"] = r.a;
  j["n_cells"] = r.n_cells;
  j["symmetry_class"] = r.symmetry_class;
  j["r_t"] = r.geom.r_t;
  j["theta_plus"] = r.geom.theta_plus;
  j["theta_minus"] = r.geom.theta_minus;
  j["alpha_plus"] = r.geom.alpha_plus;
  j["alpha_minus"] = r.geom.alpha_minus;
  j["c_plus"] = r.geom.c_plus;
  j["c_minus"] = r.geom.c_minus;
  j["chord_plus"] = r.geom.chord_plus;
  j["chord_minus"] = r.geom.chord_minus;
  j["ch_len"] = r.geom.ch_len;
  j["t_len"] = r.geom.t_len;
  j["t1"] = r.geom.t1;
  j["t2"] = r.geom.t2;
  j["d"] = r.geom.d;
  j["d_R"] = r.geom.d_R;
  j["L"] = r.geom.L;
  j["a_hat_plus"] = r.vectors.a_hat_plus;
  j["a_hat_minus"] = r.vectors.a_hat_minus;
  j["r_tilde"] = r.reciprocal.r_tilde;
  j["b_tilde_plus"] = r.reciprocal.b_tilde_plus;
  j["b_tilde_minus"] = r.reciprocal.b_tilde_minus;
  j["b_prime_plus"] = r.reciprocal.b_prime_plus;
  j["b_prime_minus"] = r.reciprocal.b_prime_minus;
  j["b_dprime_plus"] = r.reciprocal.b_dprime_plus;
  j["b_dprime_minus"] = r.reciprocal.b_dprime_minus;
  j["a_tilde"] = r.reciprocal.a_tilde;
  j["a_star_plus"] = r.a_star_plus;
  j["a_star_minus"] = r.a_star_minus;
  return j;
}

inline GeometryReport from_json(const nlohmann::json& j) {
  // Rebuild from the defining inputs, then overwrite every stored scalar so
  // the round trip is bit-exact even if formats drift.
  ChiralSpec spec{j.at("n").get<int>(), j.at("m").get<int>(), j.at("a").get<double>()};
  GeometryReport r = build_geometry_report(spec, j.at("n_cells").get<int>());
  r.symmetry_class = j.at("symmetry_class").get<std::string>();
  r.geom.r_t = j.at("r_t").get<double>();
  r.geom.theta_plus = j.at("theta_plus").get<double>();
  r.geom.theta_minus = j.at("theta_minus").get<double>();
  r.geom.alpha_plus = j.at("alpha_plus").get<double>();
  r.geom.alpha_minus = j.at("alpha_minus").get<double>();
  r.geom.c_plus = j.at("c_plus").get<double>();
  r.geom.c_minus = j.at("c_minus").get<double>();
  r.geom.chord_plus = j.at("chord_plus").get<double>();
  r.geom.chord_minus = j.at("chord_minus").get<double>();
  r.geom.ch_len = j.at("ch_len").get<double>();
  r.geom.t_len = j.at("t_len").get<double>();
  r.geom.t1 = j.at("t1").get<int>();
  r.geom.t2 = j.at("t2").get<int>();
  r.geom.d = j.at("d").get<int>();
  r.geom.d_R = j.at("d_R").get<int>();
  r.geom.L = j.at("L").get<int>();
  r.vectors.a_hat_plus = j.at("a_hat_plus").get<std::array<double, 3>>();
  r.vectors.a_hat_minus = j.at("a_hat_minus").get<std::array<double, 3>>();
  r.reciprocal.r_tilde = j.at("r_tilde").get<double>();
  r.reciprocal.b_tilde_plus = j.at("b_tilde_plus").get<std::array<double, 3>>();
  r.reciprocal.b_tilde_minus = j.at("b_tilde_minus").get<std::array<double, 3>>();
  r.reciprocal.b_prime_plus = j.at("b_prime_plus").get<double>();
  r.reciprocal.b_prime_minus = j.at("b_prime_minus").get<double>();
  r.reciprocal.b_dprime_plus = j.at("b_dprime_plus").get<double>();
  r.reciprocal.b_dprime_minus = j.at("b_dprime_minus").get<double>();
  r.reciprocal.a_tilde = j.at("a_tilde").get<double>();
  r.a_star_plus = j.at("a_star_plus").get<double>();
  r.a_star_minus = j.at("a_star_minus").get<double>();
  return r;
}

struct BandRecord {
  int nu = 0;
  double kappa = 0.0;
  double eps_minus = 0.0;
  double eps_plus = 0.0;
};

}  // namespace swcnt
