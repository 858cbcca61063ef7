#ifndef CAMRING_JSON_IO_HPP
#define CAMRING_JSON_IO_HPP

#include <json.hpp>

#include "camring/higgs.hpp"
#include "camring/partitions.hpp"

namespace camring {

using Json = nlohmann::ordered_json;

/// Parsed job input: either a bare arrangement or a reflection group with
/// its mirror arrangement.
struct Input {
    std::optional<ReflectionGroup> group;
    Arrangement arrangement;

    const Arrangement& arr() const { return group ? group->mirror_arrangement() : arrangement; }
};

/// {"ambient_dim": n, "hyperplanes": [[rational strings], ...], "labels": [...]}
Arrangement arrangement_from_json(const Json& j);
/// {"weyl": {"family": "A"|"B"|"D", "rank": n}} or {"generators": [[row-major strings]]}
/// or an arrangement document.
Input input_from_json(const Json& j);
/// "A:n" | "B:n" | "D:n"; A:n is the symmetric group on n+1 letters.
ReflectionGroup weyl_from_spec(const std::string& spec);

Json subspace_to_json(const Subspace& s);
Json flat_to_json(const IntersectionPoset& poset, int flat);
Json poset_to_json(const IntersectionPoset& poset);

Json monoid_to_json(const MonoidElement& e);
MonoidElement monoid_from_json(const IntersectionPoset& poset, const Json& j);

Json ring_to_json(const RingElement& x);
RingElement ring_from_json(const IntersectionPoset& poset, const Json& j);

Json partition_to_json(const WeightedPartition& p);
WeightedPartition partition_from_json(const Json& j);

/// {"simple_roots": [[...]], "simple_coroots": [[...]], "pairing_scale": "1", "sign": "+"}
RootDatum datum_from_json(const Json& j);

} // namespace camring

#endif
