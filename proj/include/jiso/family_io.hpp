#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "jiso/family.hpp"

namespace jiso {

// Family files: UTF-8 text, one subset per line as comma-separated strictly
// increasing 1-based integers ("1,3,5"). Blank lines and '#' comments are
// ignored. Parse errors carry the 1-based line number.

struct FamilyParseError : std::runtime_error {
  int line;
  FamilyParseError(int line, const std::string& what);
};

// The ground set defaults to the largest element seen; pass n to embed into
// a larger one. All lines must have the same cardinality.
Family read_family(std::istream& in, int n = 0);
Family read_family_file(const std::string& path, int n = 0);

void write_family(std::ostream& out, const Family& fam);
std::string format_family(const Family& fam);

}  // namespace jiso
