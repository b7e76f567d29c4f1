#pragma once

#include <json.hpp>

#include "torus/enumeration.hpp"

namespace torus {

/// Repo-wide matrix format:
/// {"dim": d, "entries": [[...]], "scale_num": n, "scale_den": m}
/// where the true matrix is (n/m) * entries. Entries exceeding the int64
/// range are emitted as decimal strings.
nlohmann::json matrix_to_json(const IntMat& m, const Int& scale_num = Int(1),
                              const Int& scale_den = Int(1));

IntMat matrix_from_json(const nlohmann::json& j, Rat* scale = nullptr);

/// {"gram": <matrix>, "levels": [{"q": "...", "mult": n, "reps": [[...]]}]}
/// with q as a decimal string.
nlohmann::json spectrum_to_json(const IntGramMatrix& g, const Spectrum& s);

Spectrum spectrum_from_json(const nlohmann::json& j, IntMat* gram = nullptr);

}  // namespace torus
