#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fanlike/catalog.hpp"
#include "fanlike/search.hpp"

namespace fanlike {

/// CPLX v1: `n m` on the first line, then whitespace-separated minimal
/// non-faces in compact or braced form. `#` starts a comment.
PLSphere parse_cplx(std::string_view text);
std::string print_cplx(const PLSphere& k);

/// `rows cols`, then the entries row-major. `#` starts a comment.
IntMatrix parse_matrix(std::string_view text);

std::string read_file(const std::string& path);

/// A catalog id ("K3_11") or a path to a CPLX file.
PLSphere load_complex(const std::string& arg);
/// A path to a matrix file, or an inline matrix when the text contains ';'
/// ("1 0 1;0 1 1" gives a 2x3 matrix).
IntMatrix load_matrix(const std::string& arg);

nlohmann::json to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PLSphere& k);
nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EntryReport& r);
/// Same schema as the catalog fixture; templates without the identity block.
nlohmann::json to_json(const CatalogEntry& e);

}  // namespace fanlike
