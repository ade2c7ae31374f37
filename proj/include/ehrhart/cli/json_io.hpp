#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "ehrhart/integer.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart::cli {

using Json = nlohmann::ordered_json;

struct SimplexFile {
  std::optional<std::string> name;
  IntMatrix vertices;
};

/// Integers fitting in 64 bits become JSON numbers, larger ones decimal
/// strings.
Json int_json(const Int& v);
Json ints_json(std::span<const Int> values);
Json matrix_json(const IntMatrix& m);

/// {"vertices": [[...], ...], "name": "..."}; entries must be JSON
/// integers or decimal strings. Throws InvalidInput.
SimplexFile parse_simplex_json(const std::string& text);
SimplexFile read_simplex_file(const std::string& path);
Json simplex_json(const SimplexFile& file);

/// "1,2,6,3,5,1" (brackets and spaces tolerated). Throws InvalidInput.
IntVector parse_int_list(const std::string& text);

/// The verdict block shared by every report.
Json properties_json(std::span<const Int> delta);

/// delta, d, s, normalized_volume (when given), properties, interior_m1,
/// bound.
Json delta_report(std::span<const Int> delta, const std::optional<Int>& normalized_volume);

}  // namespace ehrhart::cli
