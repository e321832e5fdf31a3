#include "sigmaforge/sigma.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> parse_prime_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ConfigError("sigma spec: empty prime in list '" + text + "'");
    size_t pos = 0;
    int p;
    try {
      p = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ConfigError("sigma spec: '" + tok + "' is not a number");
    }
    if (pos != tok.size()) throw ConfigError("sigma spec: '" + tok + "' is not a number");
    if (!is_prime(p)) throw ConfigError("sigma spec: " + tok + " is not prime");
    out.push_back(p);
  }
  if (out.empty()) throw ConfigError("sigma spec: empty prime list");
  return out;
}

}  // namespace

SigmaPartition SigmaPartition::finest() {
  SigmaPartition s;
  s.kind_ = Kind::Finest;
  return s;
}

SigmaPartition SigmaPartition::coarsest() {
  SigmaPartition s;
  s.kind_ = Kind::Coarsest;
  return s;
}

SigmaPartition SigmaPartition::listed(std::vector<std::set<int>> classes,
                                      bool with_rest) {
  if (classes.empty()) throw ConfigError("sigma spec: no classes given");
  std::set<int> seen;
  for (const auto& cls : classes) {
    if (cls.empty()) throw ConfigError("sigma spec: empty class");
    for (int p : cls) {
      if (!is_prime(p))
        throw ConfigError("sigma spec: " + std::to_string(p) + " is not prime");
      if (!seen.insert(p).second)
        throw ConfigError("sigma spec: prime " + std::to_string(p) +
                          " appears in two classes");
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::set<int>& a, const std::set<int>& b) {
              return *a.begin() < *b.begin();
            });
  SigmaPartition s;
  s.kind_ = Kind::Listed;
  s.classes_ = std::move(classes);
  s.has_rest_ = with_rest;
  return s;
}

SigmaPartition SigmaPartition::parse(const std::string& raw) {
  std::string text = raw;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.erase(text.begin());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.pop_back();

  if (text == "finest") return finest();
  if (text == "coarsest") return coarsest();

  auto colon = text.find(':');
  std::string head = text.substr(0, colon == std::string::npos ? text.size() : colon);
  if (colon == std::string::npos)
    throw ConfigError("sigma spec: unknown partition '" + text + "'");
  std::string body = text.substr(colon + 1);

  if (head == "pi") {
    std::vector<int> primes = parse_prime_list(body);
    return listed({std::set<int>(primes.begin(), primes.end())});
  }
  if (head == "onepi") {
    std::vector<int> primes = parse_prime_list(body);
    std::vector<std::set<int>> classes;
    for (int p : primes) classes.push_back({p});
    return listed(std::move(classes));
  }
  if (head == "classes") {
    std::vector<std::set<int>> classes;
    bool with_rest = false;
    size_t i = 0;
    while (i < body.size()) {
      if (body.compare(i, std::string::npos, "rest") == 0) {
        with_rest = true;
        break;
      }
      if (body[i] != '[')
        throw ConfigError("sigma spec: expected '[' or 'rest' in '" + body + "'");
      size_t close = body.find(']', i);
      if (close == std::string::npos)
        throw ConfigError("sigma spec: unterminated class in '" + body + "'");
      std::vector<int> primes = parse_prime_list(body.substr(i + 1, close - i - 1));
      classes.emplace_back(primes.begin(), primes.end());
      i = close + 1;
    }
    return listed(std::move(classes), with_rest);
  }
  throw ConfigError("sigma spec: unknown partition kind '" + head + "'");
}

int SigmaPartition::class_of(int p) const {
  switch (kind_) {
    case Kind::Finest:
      return p;
    case Kind::Coarsest:
      return 0;
    case Kind::Listed:
      for (size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].count(p)) return static_cast<int>(i);
      if (!has_rest_)
        throw ConfigError("sigma spec " + name() + " does not assign prime " +
                          std::to_string(p));
      return rest_class();
  }
  throw DomainError("unreachable sigma kind");
}

std::set<int> SigmaPartition::sigma_of(long long n) const {
  std::set<int> out;
  for (int p : prime_factors(static_cast<long>(n))) out.insert(class_of(p));
  return out;
}

long long SigmaPartition::class_part(long long n, int cls) const {
  std::set<int> primes;
  for (int p : prime_factors(static_cast<long>(n)))
    if (class_of(p) == cls) primes.insert(p);
  return pi_part(static_cast<long>(n), primes);
}

std::set<int> SigmaPartition::sigma_of(const Subgroup& h) const {
  return sigma_of(h.order());
}

std::string SigmaPartition::name() const {
  switch (kind_) {
    case Kind::Finest:
      return "finest";
    case Kind::Coarsest:
      return "coarsest";
    case Kind::Listed:
      break;
  }
  bool all_singletons = true;
  for (const auto& cls : classes_)
    if (cls.size() != 1) all_singletons = false;
  std::ostringstream os;
  if (has_rest_ && classes_.size() == 1) {
    os << "pi:";
    bool first = true;
    for (int p : classes_[0]) {
      if (!first) os << ',';
      os << p;
      first = false;
    }
  } else if (has_rest_ && all_singletons) {
    os << "onepi:";
    for (size_t i = 0; i < classes_.size(); ++i) {
      if (i) os << ',';
      os << *classes_[i].begin();
    }
  } else {
    os << "classes:";
    for (const auto& cls : classes_) {
      os << '[';
      bool first = true;
      for (int p : cls) {
        if (!first) os << ',';
        os << p;
        first = false;
      }
      os << ']';
    }
    if (has_rest_) os << "rest";
  }
  return os.str();
}

std::string SigmaPartition::class_name(int cls) const {
  switch (kind_) {
    case Kind::Finest:
      return "{" + std::to_string(cls) + "}";
    case Kind::Coarsest:
      return "{all primes}";
    case Kind::Listed:
      break;
  }
  if (cls == rest_class()) return "{rest}";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int p : classes_[static_cast<size_t>(cls)]) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << '}';
  return os.str();
}

bool SigmaPartition::operator==(const SigmaPartition& other) const {
  return kind_ == other.kind_ && classes_ == other.classes_ &&
         (kind_ != Kind::Listed || has_rest_ == other.has_rest_);
}

bool is_sigma_primary_order(long long n, const SigmaPartition& sigma) {
  return sigma.sigma_of(n).size() <= 1;
}

bool is_sigma_primary(const Subgroup& h, const SigmaPartition& sigma) {
  return is_sigma_primary_order(h.order(), sigma);
}

bool is_sigma_nilpotent(const Subgroup& h, const SigmaPartition& sigma) {
  for (int cls : sigma.sigma_of(h.order())) {
    std::set<int> primes;
    for (int p : prime_factors(h.order()))
      if (sigma.class_of(p) == cls) primes.insert(p);
    if (o_pi(h, primes).order() != pi_part(h.order(), primes)) return false;
  }
  return true;
}

Subgroup sigma_nilpotent_residual(const GroupPtr& g, const SigmaPartition& sigma) {
  return residual(g, ResidualClass::SigmaNilpotent, &sigma);
}

std::vector<int> hall_subgroups(const SubgroupLattice& lat,
                                const SigmaPartition& sigma, int cls) {
  long long target = sigma.class_part(lat.node(lat.top()).order(), cls);
  std::vector<int> out;
  for (int i = 0; i < lat.size(); ++i)
    if (lat.node(i).order() == target) out.push_back(i);
  return out;
}

std::vector<int> classes_meeting(const SubgroupLattice& lat,
                                 const SigmaPartition& sigma) {
  std::set<int> cls = sigma.sigma_of(lat.node(lat.top()).order());
  return std::vector<int>(cls.begin(), cls.end());
}

std::vector<char> sigma_subnormal_in(const LatticeAnalysis& an,
                                     const SigmaPartition& sigma, int k) {
  const SubgroupLattice& lat = an.lattice();
  std::vector<char> marked(static_cast<size_t>(lat.size()), 0);
  marked[static_cast<size_t>(k)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int h = 0; h < lat.size(); ++h) {
      if (marked[static_cast<size_t>(h)] || !lat.leq(h, k)) continue;
      for (int m = 0; m < lat.size(); ++m) {
        if (!marked[static_cast<size_t>(m)] || !lat.leq(h, m)) continue;
        bool step = an.normal_in(h, m);
        if (!step) {
          long quo = lat.node(m).order() / lat.node(an.core_in(h, m)).order();
          step = is_sigma_primary_order(quo, sigma);
        }
        if (step) {
          marked[static_cast<size_t>(h)] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  return marked;
}

bool is_quasinormal_in(const LatticeAnalysis& an, int a, int b) {
  const SubgroupLattice& lat = an.lattice();
  for (int x = 0; x < lat.size(); ++x)
    if (lat.leq(x, b) && !permutes(lat.node(a), lat.node(x))) return false;
  return true;
}

bool is_sigma_seminormal(const Subgroup& a, const SigmaPartition& sigma) {
  const GroupPtr& g = a.ambient();
  std::set<int> sa = sigma.sigma_of(a.order());
  for (std::int32_t e = 0; e < g->order(); ++e) {
    std::set<int> se = sigma.sigma_of(g->element_order(e));
    bool disjoint = true;
    for (int c : se)
      if (sa.count(c)) disjoint = false;
    if (!disjoint) continue;
    if (!(conjugate(a, e) == a)) return false;
  }
  return true;
}

SigmaQuasinormalDB::SigmaQuasinormalDB(const LatticeAnalysis& an,
                                       const SigmaPartition& sigma)
    : an_(&an), sigma_(sigma), size_(an.lattice().size()) {
  const SubgroupLattice& lat = an.lattice();
  ssn_.assign(static_cast<size_t>(size_) * static_cast<size_t>(size_), 0);
  qn_.assign(ssn_.size(), 0);
  for (int k = 0; k < size_; ++k) {
    std::vector<char> col = sigma_subnormal_in(an, sigma_, k);
    for (int h = 0; h < size_; ++h) {
      if (!lat.leq(h, k)) continue;
      ssn_[id(h, k)] = col[static_cast<size_t>(h)];
      qn_[id(h, k)] = (col[static_cast<size_t>(h)] && an.modular_in(h, k)) ? 1 : 0;
    }
  }

  subqn_.assign(static_cast<size_t>(size_), 0);
  subqn_[static_cast<size_t>(lat.top())] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int h = 0; h < size_; ++h) {
      if (subqn_[static_cast<size_t>(h)]) continue;
      for (int k = 0; k < size_; ++k) {
        if (!subqn_[static_cast<size_t>(k)] || !lat.leq(h, k)) continue;
        if (qn_[id(h, k)]) {
          subqn_[static_cast<size_t>(h)] = 1;
          changed = true;
          break;
        }
      }
    }
  }
}

bool SigmaQuasinormalDB::sigma_subnormal(int h, int k) const {
  if (!an_->lattice().leq(h, k))
    throw DomainError("sigma_subnormal queried outside the order relation");
  return ssn_[id(h, k)] != 0;
}

bool SigmaQuasinormalDB::qn(int h, int k) const {
  if (!an_->lattice().leq(h, k))
    throw DomainError("qn queried outside the order relation");
  return qn_[id(h, k)] != 0;
}

bool SigmaQuasinormalDB::qsigmat_holds(std::vector<int>* witnesses) const {
  bool ok = true;
  for (int h = 0; h < size_; ++h) {
    if (!subqn_[static_cast<size_t>(h)]) continue;
    if (qn_[id(h, an_->lattice().top())]) continue;
    ok = false;
    if (witnesses != nullptr) witnesses->push_back(h);
  }
  return ok;
}

}  // namespace sigmaforge
