#include "sigmaforge/catalog.hpp"

#include <cstdint>
#include <optional>
#include <sstream>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

namespace {

Perm cycle(int degree, const std::vector<int>& pts) {
  std::vector<std::uint8_t> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
  for (size_t i = 0; i < pts.size(); ++i)
    img[static_cast<size_t>(pts[i])] =
        static_cast<std::uint8_t>(pts[(i + 1) % pts.size()]);
  return Perm(std::move(img));
}

Perm from_map(int degree, const std::vector<int>& images) {
  std::vector<std::uint8_t> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<size_t>(i)] = static_cast<std::uint8_t>(images[static_cast<size_t>(i)]);
  return Perm(std::move(img));
}

std::optional<long> parse_count(const std::string& s) {
  if (s.empty()) return std::nullopt;
  long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
    if (v > 100000) return std::nullopt;
  }
  return v;
}

std::vector<int> upto(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  return v;
}

GroupPtr cyclic_group(long n, long cap) {
  if (n < 1) throw ConfigError("cyclic group order must be >= 1");
  if (n > 255) throw ConfigError("cyclic group order exceeds the degree limit of 255");
  int d = static_cast<int>(n);
  std::vector<Perm> gens;
  if (n > 1) gens.push_back(cycle(d, upto(d)));
  return PermGroup::generate(std::max(d, 1), gens, cap);
}

GroupPtr dihedral_group(long n, long cap) {
  if (n < 6 || n % 2 != 0)
    throw ConfigError("dihedral:<n> takes the group order, an even n >= 6");
  int m = static_cast<int>(n / 2);
  std::vector<int> refl(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) refl[static_cast<size_t>(i)] = (m - i) % m;
  return PermGroup::generate(m, {cycle(m, upto(m)), from_map(m, refl)}, cap);
}

GroupPtr symmetric_group(long n, long cap) {
  if (n < 1 || n > 255) throw ConfigError("symmetric:<n> needs 1 <= n <= 255");
  int d = static_cast<int>(n);
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(cycle(d, {0, 1}));
  if (n >= 3) gens.push_back(cycle(d, upto(d)));
  return PermGroup::generate(std::max(d, 1), gens, cap);
}

GroupPtr alternating_group(long n, long cap) {
  if (n < 3 || n > 255) throw ConfigError("alternating:<n> needs 3 <= n <= 255");
  int d = static_cast<int>(n);
  std::vector<Perm> gens{cycle(d, {0, 1, 2})};
  if (n > 3) {
    std::vector<int> pts = upto(d);
    if (n % 2 == 0) pts.erase(pts.begin());  // even n: the (n-1)-cycle is even
    gens.push_back(cycle(d, pts));
  }
  return PermGroup::generate(d, gens, cap);
}

GroupPtr quaternion_group(long cap) {
  return PermGroup::generate(
      8,
      {cycle(8, {0, 1, 2, 3}) * cycle(8, {4, 5, 6, 7}),
       cycle(8, {0, 4, 2, 6}) * cycle(8, {1, 7, 3, 5})},
      cap);
}

// SL(2,p) acting on the p^2 - 1 nonzero column vectors of F_p^2, generated
// by S = [[0,-1],[1,0]] and T = [[1,1],[0,1]].
GroupPtr sl2_group(int p, long cap) {
  int count = p * p - 1;
  auto idx = [p](int x, int y) { return x * p + y - 1; };  // (0,0) excluded
  auto act = [&](int a, int b, int c, int d) {
    std::vector<std::uint8_t> img(static_cast<size_t>(count));
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) {
        if (x == 0 && y == 0) continue;
        int nx = ((a * x + b * y) % p + p) % p;
        int ny = ((c * x + d * y) % p + p) % p;
        img[static_cast<size_t>(idx(x, y))] = static_cast<std::uint8_t>(idx(nx, ny));
      }
    return Perm(std::move(img));
  };
  return PermGroup::generate(count, {act(0, -1, 1, 0), act(1, 1, 0, 1)}, cap);
}

GroupPtr wreath_a5_c2(long cap) {
  std::vector<Perm> gens{
      cycle(10, {0, 1, 2}), cycle(10, {0, 1, 2, 3, 4}),
      cycle(10, {5, 6, 7}), cycle(10, {5, 6, 7, 8, 9}),
      cycle(10, {0, 5}) * cycle(10, {1, 6}) * cycle(10, {2, 7}) *
          cycle(10, {3, 8}) * cycle(10, {4, 9})};
  return PermGroup::generate(10, gens, cap);
}

Perm pad(const Perm& p, int offset, int degree) {
  std::vector<std::uint8_t> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < p.degree(); ++i)
    img[static_cast<size_t>(offset + i)] = static_cast<std::uint8_t>(offset + p[i]);
  return Perm(std::move(img));
}

GroupPtr atom(const std::string& name, long cap) {
  if (name == "v4") return catalog_group("c2xc2", cap);
  if (name == "q8" || name == "quaternion8") return quaternion_group(cap);
  if (name == "sl23" || name == "sl(2,3)") return sl2_group(3, cap);
  if (name == "sl25" || name == "sl(2,5)") return sl2_group(5, cap);
  if (name == "wreath-a5-c2") return wreath_a5_c2(cap);

  std::string head, tail;
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    head = name.substr(0, colon);
    tail = name.substr(colon + 1);
  } else if (name.size() >= 2) {
    head = name.substr(0, 1);
    tail = name.substr(1);
  }
  std::optional<long> n = parse_count(tail);
  if (n) {
    if (head == "c" || head == "cyclic") return cyclic_group(*n, cap);
    if (head == "d" || head == "dihedral") return dihedral_group(*n, cap);
    if (head == "s" || head == "symmetric") return symmetric_group(*n, cap);
    if (head == "a" || head == "alternating") return alternating_group(*n, cap);
  }
  throw ConfigError("unknown catalog group '" + name + "'");
}

}  // namespace

GroupPtr catalog_group(const std::string& name, long order_cap) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1) return atom(name, order_cap);

  std::vector<GroupPtr> groups;
  int degree = 0;
  long order = 1;
  for (const std::string& part : parts) {
    if (part.empty())
      throw ConfigError("empty factor in catalog product '" + name + "'");
    groups.push_back(atom(part, order_cap));
    degree += groups.back()->degree();
    order *= groups.back()->order();
    if (order > order_cap)
      throw ScaleError("group order exceeds the cap of " +
                       std::to_string(order_cap) + " elements; raise the cap to proceed");
  }
  if (degree > 255)
    throw ConfigError("catalog product '" + name + "' exceeds the degree limit of 255");

  std::vector<Perm> gens;
  int offset = 0;
  for (const GroupPtr& g : groups) {
    for (const Perm& p : g->generators()) gens.push_back(pad(p, offset, degree));
    offset += g->degree();
  }
  return PermGroup::generate(degree, gens, order_cap);
}

std::vector<std::string> catalog_listing() {
  return {
      "c<n>, cyclic:<n>        cyclic of order n",
      "d<n>, dihedral:<n>      dihedral of order n (n even, n >= 6)",
      "s<n>, symmetric:<n>     symmetric group on n points",
      "a<n>, alternating:<n>   alternating group on n points (n >= 3)",
      "v4                      Klein four-group",
      "q8, quaternion8         quaternion group of order 8",
      "sl23, sl(2,3)           special linear group SL(2,3)",
      "sl25, sl(2,5)           special linear group SL(2,5)",
      "wreath-a5-c2            A5 wr C2 on 10 points",
      "<name>x<name>...        direct product of catalog groups",
  };
}

}  // namespace sigmaforge
