#include "sigmaforge/group_io.hpp"

#include <fstream>
#include <sstream>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupPtr parse_group_text(const std::string& text, long order_cap) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    if (degree < 0) {
      std::istringstream head(line);
      std::string word;
      head >> word;
      if (word != "degree")
        throw ParseError("expected 'degree N' on the first line", lineno, 1);
      long n = 0;
      if (!(head >> n) || n < 1 || n > 255)
        throw ParseError("degree must be an integer between 1 and 255", lineno, 8);
      std::string extra;
      if (head >> extra)
        throw ParseError("unexpected token '" + extra + "' after the degree", lineno, 8);
      degree = static_cast<int>(n);
      continue;
    }
    gens.push_back(Perm::parse_cycles(raw, degree, lineno));  // raw keeps columns honest
  }
  if (degree < 0) throw ParseError("empty input: expected 'degree N'", lineno, 1);
  return PermGroup::generate(degree, std::move(gens), order_cap);
}

GroupPtr load_group_file(const std::string& path, long order_cap) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), order_cap);
}

std::string serialize_group(const GroupPtr& g) {
  std::ostringstream out;
  out << "degree " << g->degree() << "\n";
  for (const Perm& p : g->generators()) out << p.cycle_string() << "\n";
  return out.str();
}

}  // namespace sigmaforge
