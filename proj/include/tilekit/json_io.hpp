// JSON serialization for certificates and CLI payloads. All integers are
// emitted as decimal strings so downstream consumers never face 64-bit
// overflow; rationals serialize as "p/q".

#ifndef TILEKIT_JSON_IO_HPP
#define TILEKIT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "tilekit/bricks.hpp"
#include "tilekit/cyclic.hpp"
#include "tilekit/exact.hpp"
#include "tilekit/line.hpp"
#include "tilekit/planar.hpp"
#include "tilekit/spectral.hpp"

namespace tilekit {

using Json = nlohmann::json;

std::string int_str(Int v);
Int parse_int(const Json& j);

Json set_to_json(const GroupSubset& s);                  // array (d=1) or array of arrays
GroupSubset set_from_json(const Json& j, Int n, int d);

Json finite_set_to_json(const FiniteSetZ& s);
FiniteSetZ finite_set_from_json(const Json& j);

Json poly_to_json(const IntPoly& p);  // coefficient array, lowest degree first
IntPoly poly_from_json(const Json& j);

Json points_to_json(const std::vector<Point2>& pts);
std::vector<Point2> points_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json certificate_to_json(const TilingCertificate1D& c);
TilingCertificate1D certificate_from_json(const Json& j);

Json planar_certificate_to_json(const PeriodicComplement2D& c);
PeriodicComplement2D planar_certificate_from_json(const Json& j);

Json placements_to_json(const std::vector<RectPlacement>& p);
std::vector<RectPlacement> placements_from_json(const Json& j);

Json butson_to_json(const ButsonMatrix& m);
ButsonMatrix butson_from_json(const Json& j);

Json tiling_to_json(const CyclicTiling& t);

// FNV-1a 64-bit digest of a canonical dump, as fixed-width hex.
std::string json_digest(const Json& j);

}  // namespace tilekit

#endif  // TILEKIT_JSON_IO_HPP
