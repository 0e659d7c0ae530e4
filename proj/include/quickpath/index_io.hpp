#pragma once

#include "quickpath/engine.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace quickpath {

using LoadedIndex = std::variant<FixedDestIndex, TwoPointIndex>;

/// Versioned text format `qpx v1`. Reals are written with 17 significant
/// digits, so a saved index reproduces query answers bit-identically.
void save_index(const FixedDestIndex& index, std::ostream& out);
void save_index(const TwoPointIndex& index, std::ostream& out);

void save_index_file(const FixedDestIndex& index, const std::string& path);
void save_index_file(const TwoPointIndex& index, const std::string& path);

LoadedIndex load_index(std::istream& in);
LoadedIndex load_index_file(const std::string& path);

} // namespace quickpath
