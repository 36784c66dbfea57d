#include "demazure/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace demazure {

namespace {

std::vector<IntVec> cartan_table(const CartanType& t) {
  const int n = t.rank;
  std::vector<IntVec> a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, Int aij = -1, Int aji = -1) {
    a[i - 1][j - 1] = aij;
    a[j - 1][i - 1] = aji;
  };
  switch (t.family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':  // α_n short
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 1, n, -2, -1);
      break;
    case 'C':  // α_n long
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 1, n, -1, -2);
      break;
    case 'D':
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'G':
      link(1, 2, -1, -3);
      break;
    case 'F':
      link(1, 2);
      link(2, 3, -2, -1);
      link(3, 4);
      break;
    case 'E':
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    default:
      break;
  }
  return a;
}

// Standard rational realizations; rows are the simple roots.
std::vector<RatVec> ambient_table(const CartanType& t) {
  const int n = t.rank;
  auto zeros = [](int d) { return RatVec(d, Rat(0)); };
  std::vector<RatVec> rows;
  auto chain = [&](int d) {
    for (int i = 0; i + 1 < n; ++i) {
      auto r = zeros(d);
      r[i] = 1;
      r[i + 1] = -1;
      rows.push_back(r);
    }
  };
  switch (t.family) {
    case 'A': {
      for (int i = 0; i < n; ++i) {
        auto r = zeros(n + 1);
        r[i] = 1;
        r[i + 1] = -1;
        rows.push_back(r);
      }
      break;
    }
    case 'B': {
      chain(n);
      auto r = zeros(n);
      r[n - 1] = 1;
      rows.push_back(r);
      break;
    }
    case 'C': {
      chain(n);
      auto r = zeros(n);
      r[n - 1] = 2;
      rows.push_back(r);
      break;
    }
    case 'D': {
      chain(n);
      auto r = zeros(n);
      r[n - 2] = 1;
      r[n - 1] = 1;
      rows.push_back(r);
      break;
    }
    case 'G': {
      rows.push_back({Rat(1), Rat(-1), Rat(0)});
      rows.push_back({Rat(-2), Rat(1), Rat(1)});
      break;
    }
    case 'F': {
      rows.push_back({Rat(0), Rat(1), Rat(-1), Rat(0)});
      rows.push_back({Rat(0), Rat(0), Rat(1), Rat(-1)});
      rows.push_back({Rat(0), Rat(0), Rat(0), Rat(1)});
      rows.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
      break;
    }
    case 'E': {
      auto a1 = zeros(8);
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      for (int k = 1; k <= 6; ++k) a1[k] = Rat(-1, 2);
      rows.push_back(a1);
      auto a2 = zeros(8);
      a2[0] = 1;
      a2[1] = 1;
      rows.push_back(a2);
      for (int i = 3; i <= n; ++i) {
        auto r = zeros(8);
        r[i - 3] = -1;
        r[i - 2] = 1;
        rows.push_back(r);
      }
      break;
    }
    default:
      break;
  }
  return rows;
}

std::vector<std::vector<Rat>> invert(const std::vector<IntVec>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("Cartan matrix not invertible");
    std::swap(m[col], m[piv]);
    const Rat inv = Rat(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rat f = m[r][col];
      for (int c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

}  // namespace

CartanType CartanType::parse(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("Cartan type too short: '" + std::string(s) + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  try {
    std::size_t used = 0;
    t.rank = std::stoi(std::string(s.substr(1)), &used);
    if (used + 1 != s.size()) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw std::invalid_argument("Bad Cartan type rank in '" + std::string(s) + "'");
  }
  if (!t.admissible())
    throw std::invalid_argument("Inadmissible Cartan type '" + std::string(s) + "'");
  return t;
}

bool CartanType::admissible() const {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::size_t expected_positive_root_count(const CartanType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'G': return 6;
    case 'F': return 24;
    case 'E': return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    default: return 0;
  }
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Weight operator*(Int k, const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c *= k;
  return r;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

std::string Coweight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].str();
  os << ')';
  return os.str();
}

RootDatum::RootDatum(CartanType type) : type_(type) {
  if (!type_.admissible())
    throw std::invalid_argument("Inadmissible Cartan type " + type_.str());
  cartan_ = cartan_table(type_);
  inv_cartan_ = invert(cartan_);
  ambient_ = ambient_table(type_);

  const int n = rank();
  // Seed with the simple roots, close the full orbit under simple
  // reflections, then keep the positive half.
  std::deque<Root> queue;
  std::set<IntVec> seen;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.weight.coords = cartan_[i];
    r.simple.assign(n, 0);
    r.simple[i] = 1;
    r.coroot.assign(n, 0);
    for (int k = 0; k < n; ++k) r.coroot[k] = cartan_[k][i];
    queue.push_back(r);
    seen.insert(r.simple);
  }
  std::vector<Root> all;
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    all.push_back(r);
    for (int i = 1; i <= n; ++i) {
      Root s = reflect(i, r);
      if (seen.insert(s.simple).second) queue.push_back(s);
    }
  }
  for (auto& r : all)
    if (r.positive()) positive_.push_back(r);
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    const Int ha = a.height(), hb = b.height();
    return ha != hb ? ha < hb : a.simple < b.simple;
  });
  simple_index_.assign(n, -1);
  for (int k = 0; k < static_cast<int>(positive_.size()); ++k) {
    index_by_simple_[positive_[k].simple] = k;
    if (positive_[k].height() == 1)
      for (int i = 0; i < n; ++i)
        if (positive_[k].simple[i] == 1) simple_index_[i] = k;
  }
  if (positive_.size() != expected_positive_root_count(type_))
    throw std::runtime_error("Root generation produced the wrong count for " + type_.str());
}

void RootDatum::check_index(int i) const {
  if (i < 1 || i > rank())
    throw std::out_of_range("simple index " + std::to_string(i) + " out of range for " + type_.str());
}

Weight RootDatum::fundamental_weight(int i) const {
  check_index(i);
  Weight w = zero_weight();
  w.coords[i - 1] = 1;
  return w;
}

Coweight RootDatum::fundamental_coweight(int i) const {
  check_index(i);
  Coweight c = zero_coweight();
  c.coords[i - 1] = 1;
  return c;
}

Rat RootDatum::pair(const Weight& w, const Coweight& c) const {
  const int n = rank();
  if (static_cast<int>(w.coords.size()) != n || static_cast<int>(c.coords.size()) != n)
    throw std::invalid_argument("pair: dimension mismatch");
  Rat out(0);
  for (int i = 0; i < n; ++i) {
    if (w.coords[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < n; ++j) row += inv_cartan_[i][j] * c.coords[j];
    out += Rat(w.coords[i]) * row;
  }
  return out;
}

Int RootDatum::pair_coroot(const Weight& w, const IntVec& coroot_x) const {
  Coweight c;
  c.coords.reserve(coroot_x.size());
  for (Int v : coroot_x) c.coords.emplace_back(v);
  return pair(w, c).as_integer();
}

Rat RootDatum::pair_root(const Root& alpha, const Coweight& c) const {
  if (alpha.simple.size() != c.coords.size())
    throw std::invalid_argument("pair_root: dimension mismatch");
  Rat out(0);
  for (std::size_t j = 0; j < c.coords.size(); ++j)
    out += Rat(alpha.simple[j]) * c.coords[j];
  return out;
}

Weight RootDatum::reflect(int i, const Weight& w) const {
  check_index(i);
  const Int k = w.coords[i - 1];  // ⟨w, α_i^∨⟩
  Weight out = w;
  if (k == 0) return out;
  for (int j = 0; j < rank(); ++j) out.coords[j] -= k * cartan_[i - 1][j];
  return out;
}

Coweight RootDatum::reflect(int i, const Coweight& c) const {
  check_index(i);
  const Rat k = c.coords[i - 1];  // ⟨α_i, c⟩
  Coweight out = c;
  if (k.is_zero()) return out;
  for (int j = 0; j < rank(); ++j) out.coords[j] -= k * Rat(cartan_[j][i - 1]);
  return out;
}

Root RootDatum::reflect(int i, const Root& r) const {
  check_index(i);
  Root out = r;
  out.weight = reflect(i, r.weight);
  Int d = 0;  // ⟨r, α_i^∨⟩ in simple coordinates
  for (int j = 0; j < rank(); ++j) d += r.simple[j] * cartan_[j][i - 1];
  out.simple[i - 1] -= d;
  const Int k = r.coroot[i - 1];  // ⟨α_i, r^∨⟩
  for (int j = 0; j < rank(); ++j) out.coroot[j] -= k * cartan_[j][i - 1];
  return out;
}

std::optional<RootDatum::SignedIndex> RootDatum::classify(const Root& r) const {
  if (auto it = index_by_simple_.find(r.simple); it != index_by_simple_.end())
    return SignedIndex{it->second, 1};
  IntVec neg = r.simple;
  for (auto& c : neg) c = -c;
  if (auto it = index_by_simple_.find(neg); it != index_by_simple_.end())
    return SignedIndex{it->second, -1};
  return std::nullopt;
}

RootDatum::Levi RootDatum::levi_subsystem(const Coweight& eta) const {
  if (static_cast<int>(eta.coords.size()) != rank())
    throw std::invalid_argument("levi_subsystem: dimension mismatch");
  if (!eta.dominant())
    throw std::invalid_argument("levi_subsystem: coweight must be dominant");
  Levi levi;
  for (int i = 1; i <= rank(); ++i)
    if (eta.coords[i - 1].is_zero()) levi.simples.push_back(i);
  for (int k = 0; k < static_cast<int>(positive_.size()); ++k)
    if (pair_root(positive_[k], eta).is_zero()) levi.positive_root_index.push_back(k);
  return levi;
}

RatVec RootDatum::simple_coords(const Weight& w) const {
  // Solve Aᵀ c = w by elimination against the transposed Cartan matrix.
  const int n = rank();
  std::vector<RatVec> m(n, RatVec(n + 1, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(cartan_[j][i]);
    m[i][n] = Rat(w.coords[i]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col].is_zero()) ++piv;
    std::swap(m[col], m[piv]);
    const Rat inv = Rat(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rat f = m[r][col];
      for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  RatVec out(n);
  for (int i = 0; i < n; ++i) out[i] = m[i][n];
  return out;
}

RatVec RootDatum::ambient_coords(const Weight& w) const {
  const RatVec c = simple_coords(w);
  RatVec p(ambient_dim(), Rat(0));
  for (int i = 0; i < rank(); ++i)
    for (int k = 0; k < ambient_dim(); ++k) p[k] += c[i] * ambient_[i][k];
  return p;
}

}  // namespace demazure
