#include "invsys/report.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace invsys {

std::vector<std::string> ring_names(const std::vector<std::string>& dual_names) {
  std::vector<std::string> lower;
  for (const auto& name : dual_names) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    lower.push_back(std::move(s));
  }
  const std::set<std::string> distinct(lower.begin(), lower.end());
  return distinct.size() == lower.size() ? lower : dual_names;
}

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const ExponentVector& e) { return Json(e.values()); }

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({to_json(c), to_json(e)}));
  return terms;
}

Json to_json(const HilbertData& h) {
  Json j;
  j["socle_degree"] = h.socle_degree;
  j["h_vector"] = h.h_vector;
  j["total_dimension"] = h.total_dimension();
  j["palindromic"] = h.is_palindromic();
  return j;
}

namespace {

Json generator_list(const std::vector<Polynomial>& gens, const std::vector<std::string>& names) {
  Json list = Json::array();
  for (const auto& g : gens) {
    Json j;
    j["display"] = g.to_string(names);
    j["degree"] = g.homogeneous_degree();
    j["terms"] = to_json(g);
    list.push_back(std::move(j));
  }
  return list;
}

}  // namespace

Json to_json(const BinomialNormalForm& nf, const std::vector<std::string>& dual_names) {
  Json j;
  j["n"] = nf.n;
  j["r"] = nf.r;
  j["a"] = nf.a;
  j["b"] = nf.b;
  j["c"] = to_json(nf.c);
  j["scale"] = to_json(nf.scale);
  Json order = Json::array();
  for (auto v : nf.variable_map) order.push_back(dual_names.at(v));
  j["core_variables"] = std::move(order);
  Json tensor = Json::array();
  for (const auto& t : nf.tensor_factors) {
    Json f;
    f["variable"] = dual_names.at(t.variable);
    f["exponent"] = t.exponent;
    tensor.push_back(std::move(f));
  }
  j["tensor_factors"] = std::move(tensor);
  j["degree"] = nf.degree();
  return j;
}

Json to_json(const ClassificationReport& report, const std::vector<std::string>& dual_names) {
  const auto& nf = report.normal_form;
  Json j;
  j["is_ci"] = report.is_ci;
  j["reason"] = to_string(report.reason);
  j["normal_form"] = to_json(nf, dual_names);
  j["mirrored"] = report.mirrored;
  Json order = Json::array();
  for (auto k : report.oriented_order) order.push_back(dual_names.at(nf.variable_map[k]));
  j["oriented_order"] = std::move(order);
  j["q"] = report.q ? Json(*report.q) : Json(nullptr);
  j["m"] = report.m ? Json(*report.m) : Json(nullptr);
  if (report.witness_index)
    j["witness"] = dual_names.at(nf.variable_map[report.oriented_order.at(*report.witness_index - 1)]);
  else
    j["witness"] = nullptr;
  j["generators"] = report.generators ? generator_list(*report.generators, ring_names(dual_names)) : Json(nullptr);
  return j;
}

Json to_json(const CrossValidation& cv, const std::vector<std::string>& dual_names) {
  const auto names = ring_names(dual_names);
  std::vector<std::string> kept;
  for (auto v : cv.oracle.kept_variables) kept.push_back(names.at(v));
  Json j;
  j["agree"] = cv.agree;
  j["classifier_is_ci"] = cv.report.is_ci;
  j["oracle_is_ci"] = cv.oracle.is_ci;
  j["oracle_mu"] = cv.oracle.ideal.mu();
  j["codimension"] = cv.oracle.codimension;
  j["oracle_generator_degrees"] = cv.oracle.ideal.generator_degrees();
  j["oracle_generators"] = generator_list(cv.oracle.ideal.generators(), kept);
  j["generators_match"] = cv.generators_match ? Json(*cv.generators_match) : Json(nullptr);
  return j;
}

Json to_json(const LefschetzReport& report, const std::vector<std::string>& ring) {
  Json j;
  j["mode"] = to_string(report.mode);
  j["field"] = report.field.name();
  j["characteristic"] = report.field.characteristic();
  j["ell"] = report.ell.to_string(ring);
  j["ell_terms"] = to_json(report.ell);
  j["wlp"] = report.wlp;
  j["slp"] = report.slp ? Json(*report.slp) : Json(nullptr);
  j["certified"] = report.certified;
  j["trials"] = report.trials;
  j["hilbert"] = to_json(report.hilbert);
  if (report.first_failure) {
    j["first_failure"] = Json::array({report.first_failure->first, report.first_failure->second});
    j["failure_degree"] = *report.failure_degree;
  } else {
    j["first_failure"] = nullptr;
    j["failure_degree"] = nullptr;
  }
  Json table = Json::array();
  for (const auto& e : report.rank_table) {
    Json row;
    row["i"] = e.i;
    row["k"] = e.k;
    row["achieved"] = e.achieved;
    row["required"] = e.required;
    table.push_back(std::move(row));
  }
  j["rank_table"] = std::move(table);
  return j;
}

Json make_report(const std::string& command, Json input, Json result) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  return j;
}

}  // namespace invsys
