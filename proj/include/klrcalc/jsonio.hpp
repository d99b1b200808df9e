#pragma once
// JSON encodings of the library's artifacts plus the little parsers the CLI
// needs. All emitters are deterministic: keys come from std::map iteration
// and elements are printed in normal form.

#include <string>
#include <vector>

#include "json.hpp"
#include "klrcalc/resolution.hpp"
#include "klrcalc/verify.hpp"

namespace klrcalc {

// {levels: [[{shift, idem}]], boundaries: [[{row, col, element}]]}
nlohmann::json complex_json(const ProjComplex& c);

// [{n, degree, rank, torsion: [...]}, ...]
nlohmann::json ext_json(const std::vector<ExtEntry>& table);

// [{word, degree, dim}, ...] restricted to nonzero entries
nlohmann::json character_json(const Character& ch);

// {check, params, status, witnesses}
nlohmann::json report_json(const std::string& check,
                           const nlohmann::json& params, bool ok,
                           const std::vector<std::string>& witnesses);

// canonical text form: 2-space indent, trailing newline
std::string dump_json(const nlohmann::json& j);

// "[lo,hi]" -> Root; throws std::invalid_argument on malformed input
Root parse_root(const std::string& s);

// "[[lo,hi],mult],..." (outer brackets optional) -> validated partition
KostantPartition parse_partition(const std::string& s);

}  // namespace klrcalc
