#include "ulrich/serialize.hpp"

#include <limits>

namespace ulrich {

namespace {

std::string rational_str(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()))
    return static_cast<std::uint64_t>(v);
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::uint64_t>());
}

Json weight_to_json(const Weight& w) { return Json(w.coeffs); }

Weight weight_from_json(const Json& j) {
  return Weight(j.get<std::vector<std::int64_t>>());
}

Json certificate_to_json(const UlrichCertificate& cert) {
  Json j;
  j["weight"] = weight_to_json(cert.weight);
  j["weight_expr"] = weight_to_expr(cert.weight);
  j["sing"] = cert.sing;
  j["rank"] = bigint_to_json(cert.rank);
  j["dim"] = cert.dim;
  j["index"] = cert.index;
  return j;
}

UlrichCertificate certificate_from_json(const Json& j) {
  UlrichCertificate cert;
  cert.weight = weight_from_json(j.at("weight"));
  cert.sing = j.at("sing").get<std::vector<std::int64_t>>();
  cert.rank = bigint_from_json(j.at("rank"));
  cert.dim = j.at("dim").get<std::int64_t>();
  cert.index = j.at("index").get<std::int64_t>();
  return cert;
}

Json sing_set_to_json(const SingSet& s) { return Json(s.values); }

SingSet sing_set_from_json(const Json& j) {
  return SingSet{j.get<std::vector<std::int64_t>>()};
}

Json form_to_json(const AffineForm& form) {
  Json j;
  j["text"] = form_to_text(form);
  j["latex"] = form_to_latex(form);
  Json mult = Json::array();
  for (const auto& q : form.multipliers) mult.push_back(rational_str(q));
  j["multipliers"] = std::move(mult);
  j["constant"] = rational_str(form.constant);
  j["coroot"] = form.coroot.coords;
  j["denominator"] = form.denom;
  return j;
}

namespace {

Json payload_head(const char* command, const VarietySpec& v) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["variety"] = v.to_string();
  return j;
}

}  // namespace

Json root_system_payload(const RootSystem& rs, const VarietySpec& v) {
  Json j = payload_head("roots", v);
  j["type"] = rs.type().to_string();
  j["rank"] = rs.rank();
  j["k"] = v.k;
  j["cartan"] = rs.cartan().entries;
  j["symmetrizer"] = rs.symmetrizer();
  j["dim"] = rs.dim(v.k);
  j["index"] = rs.fano_index(v.k);
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots()) {
    Json e;
    e["root"] = r.root.coords;
    e["coroot"] = r.coroot.coords;
    e["height"] = r.height;
    e["radical"] = r.root.coords[v.k - 1] > 0;
    roots.push_back(std::move(e));
  }
  j["positive_roots"] = std::move(roots);
  j["highest_coroot"] = rs.highest_coroot().coords;
  return j;
}

Json sing_payload(const RootSystem& rs, const VarietySpec& v, const Weight& omega,
                  const SingSet& s) {
  Json j = payload_head("sing", v);
  j["weight"] = weight_to_json(omega);
  j["weight_expr"] = weight_to_expr(omega);
  j["dim"] = rs.dim(v.k);
  j["sing"] = sing_set_to_json(s);
  return j;
}

Json sing_symbolic_payload(const RootSystem& rs, const VarietySpec& v,
                           const std::vector<AffineForm>& forms) {
  Json j = payload_head("sing", v);
  j["symbolic"] = true;
  j["dim"] = rs.dim(v.k);
  Json fs = Json::array();
  for (const auto& f : forms) fs.push_back(form_to_json(f));
  j["forms"] = std::move(fs);
  return j;
}

Json bwb_payload(const VarietySpec& v, const Weight& omega, std::int64_t twist,
                 const std::optional<CohomologyGroup>& group) {
  Json j = payload_head("bwb", v);
  j["weight"] = weight_to_json(omega);
  j["weight_expr"] = weight_to_expr(omega);
  j["twist"] = twist;
  j["vanishes"] = !group.has_value();
  if (group) {
    j["degree"] = group->degree;
    j["dual_highest_weight"] = weight_to_json(group->dual_highest_weight);
    j["dual_highest_weight_expr"] = weight_to_expr(group->dual_highest_weight);
  }
  return j;
}

Json classify_payload(const RootSystem& rs, const VarietySpec& v,
                      const std::vector<UlrichCertificate>& certs) {
  Json j = payload_head("classify", v);
  j["dim"] = rs.dim(v.k);
  j["index"] = rs.fano_index(v.k);
  Json cs = Json::array();
  for (const auto& c : certs) cs.push_back(certificate_to_json(c));
  j["certificates"] = std::move(cs);
  return j;
}

Json rank_payload(const VarietySpec& v, const Weight& omega, const BigInt& rank) {
  Json j = payload_head("rank", v);
  j["weight"] = weight_to_json(omega);
  j["weight_expr"] = weight_to_expr(omega);
  j["rank"] = bigint_to_json(rank);
  return j;
}

Json check_payload(const RootSystem& rs, const VarietySpec& v, const Weight& omega,
                   const SingSet& s, bool ulrich) {
  Json j = payload_head("check", v);
  j["weight"] = weight_to_json(omega);
  j["weight_expr"] = weight_to_expr(omega);
  j["dim"] = rs.dim(v.k);
  j["sing"] = sing_set_to_json(s);
  j["ulrich"] = ulrich;
  return j;
}

}  // namespace ulrich
