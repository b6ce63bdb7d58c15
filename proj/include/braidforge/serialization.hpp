#pragma once

#include <json.hpp>

#include "braidforge/cabling.hpp"
#include "braidforge/cover.hpp"
#include "braidforge/garside.hpp"
#include "braidforge/qp.hpp"

namespace braidforge {

using Json = nlohmann::json;

/// {"n", "delta", "factors": [[1-based images], ...]}
Json to_json(const NormalForm& nf);

/// {"n", "bands": [{"conj": word, "gen": i}, ...]}
Json to_json(const qp::QPCertificate& cert);
qp::QPCertificate certificate_from_json(const Json& j);

/// {"tubular": word, "widths": [...], "interiors": [{"orbit": i, "word": w}, ...]};
/// omitted orbits get the identity.
Json to_json(const cabling::RegularForm& rf);
cabling::RegularForm regular_form_from_json(const Json& j);

/// {"tubular": word, "positions": [word per tube position], "widths": [...]}
cabling::TubePositionAssignment assignment_from_json(const Json& j, BraidWord& tubular);

/// {"n", "k", "dim", "rows": [[...], ...]}
Json to_json(const IntMatrix& m, int n, int k);
/// Rows of Laurent polynomials rendered as text.
Json to_json(const LaurentMatrix& m);

Json to_json(const cover::CoverData& d);

}  // namespace braidforge
