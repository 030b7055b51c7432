#pragma once

#include <json.hpp>

#include "krull/filters.hpp"
#include "krull/finite_field.hpp"
#include "krull/galois.hpp"
#include "krull/gfb.hpp"
#include "krull/profinite.hpp"
#include "krull/supernatural.hpp"

namespace krull {

using Json = nlohmann::json;

Json to_json(const FiniteFieldElement& a);
/// {"field": {"p": P, "n": N}, "coords": [...]}.
FiniteFieldElement element_from_json(const Json& j);

Json to_json(const Subset& s);
/// {carrier_size, members: [[indices]]}.
Json to_json(const FiniteFilter& f);
Json to_json(const FiniteTopology& t);
/// {axiom, witness: [[indices]], points: [...]}.
Json to_json(const Violation& v);
Json to_json(const ContinuityReport& r);

Json to_json(const SubgroupDesc& h);
Json to_json(const CorrespondenceReport& r);

/// {"2": 3, "3": "inf"}.
Json to_json(const SupernaturalNumber& s);
SupernaturalNumber supernatural_from_json(const Json& j);
Json to_json(const TruncatedSupernatural& t);

/// {bound, residues: {d: r}}.
Json to_json(const CompatibleFamily& f);
/// Accepts {bound, residues}, a bare {d: r} object (bound given), or an
/// integer x (its family at the bound).
CompatibleFamily family_from_json(const Json& j, std::uint64_t bound);

Json to_json(const OpenCoset& c);
Json to_json(const KrullRoundtrip& r);
Json to_json(const LatticeResult& r);
Json to_json(const CompactnessReport& r);

}  // namespace krull
