#include "jiso/family_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jiso {

FamilyParseError::FamilyParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line(line) {}

Family read_family(std::istream& in, int n) {
  std::vector<Mask> members;
  int m = -1;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body(line);
    if (auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    while (!body.empty() && (body.back() == ' ' || body.back() == '\t' ||
                             body.back() == '\r')) {
      body.remove_suffix(1);
    }
    while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) {
      body.remove_prefix(1);
    }
    if (body.empty()) continue;

    std::vector<int> elems;
    int value = 0;
    bool in_number = false;
    int last = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      char c = i < body.size() ? body[i] : ',';
      if (c >= '0' && c <= '9') {
        value = value * 10 + (c - '0');
        if (value > kMaxGroundSet) {
          throw FamilyParseError(line_no, "element exceeds 64");
        }
        in_number = true;
      } else if (c == ',') {
        if (!in_number) {
          throw FamilyParseError(line_no, "expected an integer");
        }
        if (value < 1) {
          throw FamilyParseError(line_no, "elements are 1-based");
        }
        if (value <= last) {
          throw FamilyParseError(line_no,
                                 "elements must be strictly increasing");
        }
        elems.push_back(value);
        last = value;
        value = 0;
        in_number = false;
      } else if (c == ' ' || c == '\t') {
        if (in_number) {
          throw FamilyParseError(line_no, "whitespace inside a number");
        }
      } else {
        throw FamilyParseError(line_no, std::string("unexpected character '") +
                                            c + "'");
      }
    }
    if (m == -1) {
      m = static_cast<int>(elems.size());
    } else if (static_cast<int>(elems.size()) != m) {
      throw FamilyParseError(
          line_no, "subset has " + std::to_string(elems.size()) +
                       " elements, earlier lines have " + std::to_string(m));
    }
    members.push_back(mask_of(elems));
  }
  if (members.empty()) {
    throw FamilyParseError(line_no == 0 ? 1 : line_no, "no subsets in input");
  }
  int support = 0;
  for (Mask x : members) support = std::max(support, max_element(x));
  if (n == 0) n = support;
  if (n < support) {
    throw FamilyParseError(line_no, "ground set n=" + std::to_string(n) +
                                        " smaller than largest element " +
                                        std::to_string(support));
  }
  return Family::of(n, m, std::move(members));
}

Family read_family_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open family file: " + path);
  }
  return read_family(in, n);
}

void write_family(std::ostream& out, const Family& fam) {
  for (Mask x : fam.members) {
    out << format_subset(x) << '\n';
  }
}

std::string format_family(const Family& fam) {
  std::ostringstream out;
  write_family(out, fam);
  return out.str();
}

}  // namespace jiso
