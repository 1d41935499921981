#pragma once

#include <nlohmann/json.hpp>

#include "ulrich/classify.hpp"
#include "ulrich/cohomology.hpp"
#include "ulrich/parse.hpp"

namespace ulrich {

// Key order is fixed, so dumps are byte-stable. Payload layouts are
// described in docs/output-schema.json; every top-level payload carries
// schema_version.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Numbers that fit in unsigned 64 bits are emitted as JSON numbers,
// anything larger as a decimal string.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json certificate_to_json(const UlrichCertificate& cert);
UlrichCertificate certificate_from_json(const Json& j);

Json sing_set_to_json(const SingSet& s);
SingSet sing_set_from_json(const Json& j);

Json form_to_json(const AffineForm& form);

Json root_system_payload(const RootSystem& rs, const VarietySpec& v);
Json sing_payload(const RootSystem& rs, const VarietySpec& v, const Weight& omega,
                  const SingSet& s);
Json sing_symbolic_payload(const RootSystem& rs, const VarietySpec& v,
                           const std::vector<AffineForm>& forms);
Json bwb_payload(const VarietySpec& v, const Weight& omega, std::int64_t twist,
                 const std::optional<CohomologyGroup>& group);
Json classify_payload(const RootSystem& rs, const VarietySpec& v,
                      const std::vector<UlrichCertificate>& certs);
Json rank_payload(const VarietySpec& v, const Weight& omega, const BigInt& rank);
Json check_payload(const RootSystem& rs, const VarietySpec& v, const Weight& omega,
                   const SingSet& s, bool ulrich);

}  // namespace ulrich
