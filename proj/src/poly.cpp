#include "lcpforge/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace lcp {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int isqrt_upper(const Int& n) {
  // smallest s with s*s >= n
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  if (s * s < n) s += 1;
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyZ

PolyZ::PolyZ(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

PolyZ::PolyZ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

PolyZ PolyZ::x_power(int k) {
  std::vector<Int> c(size_t(k) + 1);
  c.back() = 1;
  return PolyZ(std::move(c));
}

void PolyZ::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZ PolyZ::operator+(const PolyZ& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return PolyZ(std::move(r));
}

PolyZ PolyZ::operator-(const PolyZ& o) const { return *this + (-o); }

PolyZ PolyZ::operator-() const {
  std::vector<Int> r = c_;
  for (auto& x : r) x = -x;
  return PolyZ(std::move(r));
}

PolyZ PolyZ::operator*(const PolyZ& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return PolyZ(std::move(r));
}

PolyZ PolyZ::operator*(const Int& s) const {
  std::vector<Int> r = c_;
  for (auto& x : r) x *= s;
  return PolyZ(std::move(r));
}

Int PolyZ::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat PolyZ::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

PolyZ PolyZ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(long(i));
  return PolyZ(std::move(r));
}

Int PolyZ::content() const {
  Int g = 0;
  for (const auto& x : c_) {
    Int t;
    mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    g = t;
  }
  return g;
}

PolyZ PolyZ::primitive_part() const {
  if (is_zero()) return {};
  Int c = content();
  if (lc() < 0) c = -c;
  std::vector<Int> r = c_;
  for (auto& x : r) x /= c;
  return PolyZ(std::move(r));
}

std::string PolyZ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c_[i];
    if (a == 0) continue;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int m = abs_int(a);
    if (i == 0 || m != 1) os << m.get_str();
    if (i > 0) {
      if (m != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// PolyQ

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

PolyQ::PolyQ(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

void PolyQ::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator-() const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x = -x;
  return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const Rat& s) const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x *= s;
  return PolyQ(std::move(r));
}

Rat PolyQ::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(long(i));
  return PolyQ(std::move(r));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  return *this * (1 / lc());
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
  if (divisor.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rat> rem = c_;
  int dd = divisor.degree();
  if (degree() < dd) return {PolyQ{}, *this};
  std::vector<Rat> quot(size_t(degree() - dd) + 1);
  Rat inv = 1 / divisor.lc();
  for (int k = degree() - dd; k >= 0; --k) {
    Rat q = rem[size_t(k) + dd] * inv;
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[size_t(k) + j] -= q * divisor.coeff(j);
  }
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

std::string PolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = c_[i];
    if (a == 0) continue;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Rat m = abs(a);
    if (i == 0 || m != 1) os << m.get_str();
    if (i > 0) {
      if (m != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

PolyQ to_polyq(const PolyZ& p) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return PolyQ(std::move(c));
}

std::optional<PolyZ> to_polyz(const PolyQ& p) {
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    if (!is_integer(x)) return std::nullopt;
    c.push_back(x.get_num());
  }
  return PolyZ(std::move(c));
}

std::optional<PolyZ> divide_exact(const PolyZ& a, const PolyZ& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return PolyZ{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> quot(size_t(a.degree() - b.degree()) + 1);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Int top = rem[size_t(k) + b.degree()];
    if (top == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    if (r != 0) return std::nullopt;
    quot[k] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[size_t(k) + j] -= q * b.coeff(j);
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return PolyZ(std::move(quot));
}

PolyQ gcd_q(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyZ gcd_z(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();  // |b| normalized sign
  if (b.is_zero()) return a.primitive_part() * a.content();
  Int cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  PolyQ g = gcd_q(to_polyq(a), to_polyq(b));
  PolyZ gz = to_polyz(g * Rat(common_denominator(g.coeffs()))).value();
  return gz.primitive_part() * cg;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (Yun)

std::vector<SquarefreePart> squarefree_decomposition(const PolyZ& p) {
  if (p.degree() < 1) return {};
  PolyQ f = to_polyq(p.primitive_part());
  PolyQ fp = f.derivative();
  PolyQ g = gcd_q(f, fp);
  std::vector<SquarefreePart> parts;
  if (g.degree() == 0) {
    parts.push_back({p.primitive_part(), 1});
    return parts;
  }
  PolyQ c = f.divmod(g).first;
  PolyQ d = fp.divmod(g).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    PolyQ ai = gcd_q(c, d);
    if (ai.degree() > 0) {
      PolyQ scaled = ai * Rat(common_denominator(ai.coeffs()));
      parts.push_back({to_polyz(scaled).value().primitive_part(), i});
    }
    c = c.divmod(ai).first;
    d = d.divmod(ai).first - c.derivative();
    ++i;
  }
  return parts;
}

PolyZ squarefree_part(const PolyZ& p) {
  PolyZ r{1};
  for (const auto& part : squarefree_decomposition(p)) r = r * part.poly;
  return r;
}

// ---------------------------------------------------------------------------
// Integer factorization helpers (for divisor enumeration in the factor search)

namespace {

void factor_integer(Int n, std::map<Int, int>& out);

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xB5297A4DUL);
  while (true) {
    Int x = rng.get_z_range(n - 2) + 2, y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = abs_int(x - y);
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_integer(Int n, std::map<Int, int>& out) {
  if (n <= 1) return;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (n % p == 0) {
      ++out[Int(p)];
      n /= p;
    }
  }
  long p = 41;
  while (n > 1 && Int(p) * p <= n && p < 100000) {
    while (n % p == 0) {
      ++out[Int(p)];
      n /= p;
    }
    p += 2;
  }
  if (n == 1) return;
  if (Int(p) * p > n || mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_integer(d, out);
  factor_integer(n / d, out);
}

/// All divisors of |n| with both signs, |divisor| <= cap, sorted by |.| then sign.
std::vector<Int> signed_divisors(const Int& n, const Int& cap) {
  std::map<Int, int> fac;
  factor_integer(abs_int(n), fac);
  std::vector<Int> divs{1};
  for (const auto& [p, e] : fac) {
    size_t base = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) {
        Int d = divs[i] * pk;
        if (d <= cap) divs.push_back(d);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  std::vector<Int> out;
  out.reserve(divs.size() * 2);
  for (const auto& d : divs) {
    if (d > cap) break;
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Factorization over Z

namespace {

/// Coefficient bound for any factor of p (Mignotte-style, deliberately loose).
Int factor_coeff_bound(const PolyZ& p) {
  Int norm2 = 0;
  for (const auto& c : p.coeffs()) norm2 += c * c;
  Int b = isqrt_upper(norm2) + abs_int(p.lc());
  Int pow2 = 1;
  mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), mp_bitcnt_t(p.degree()));
  return b * pow2;
}

/// Strips all rational roots of g (primitive, positive lc), appending the
/// corresponding primitive linear factors.
PolyZ strip_rational_roots(PolyZ g, std::vector<PolyZ>& out) {
  bool progress = true;
  while (g.degree() >= 1 && progress) {
    progress = false;
    // root 0
    if (g.coeff(0) == 0) {
      out.push_back(PolyZ{0, 1});
      g = divide_exact(g, PolyZ{0, 1}).value();
      progress = true;
      continue;
    }
    std::vector<Int> nums = signed_divisors(g.coeff(0), abs_int(g.coeff(0)));
    std::vector<Int> dens = signed_divisors(g.lc(), abs_int(g.lc()));
    for (const auto& num : nums) {
      for (const auto& den : dens) {
        if (den <= 0) continue;
        Int gg;
        mpz_gcd(gg.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (gg != 1) continue;
        if (g.eval(Rat(num, den)) == 0) {
          PolyZ lin(std::vector<Int>{-num, den});
          out.push_back(lin);
          g = divide_exact(g, lin).value();
          progress = true;
          break;
        }
      }
      if (progress) break;
    }
  }
  return g;
}

struct KroneckerSearch {
  const PolyZ& g;
  int d;
  std::vector<Int> xs;
  std::vector<std::vector<Int>> divs;
  std::vector<PolyQ> lagrange;
  long budget = 40'000'000;

  KroneckerSearch(const PolyZ& poly, int deg) : g(poly), d(deg) {
    Int bound = factor_coeff_bound(g);
    for (int i = 0; xs.size() < size_t(d) + 1; ++i) {
      long x = (i + 1) / 2 * ((i % 2) ? 1 : -1);  // 0, 1, -1, 2, -2, ...
      xs.emplace_back(x);
    }
    // Value bound at x: sum of bound * |x|^j over j <= d.
    for (const auto& x : xs) {
      Int vb = 0, xp = 1;
      for (int j = 0; j <= d; ++j) {
        vb += bound * xp;
        xp *= abs_int(x);
        if (x == 0) break;
      }
      divs.push_back(signed_divisors(g.eval(x), vb));
    }
    // Search the points with the fewest candidate values first.
    std::vector<int> order(xs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return divs[a].size() < divs[b].size(); });
    std::vector<Int> xs2;
    std::vector<std::vector<Int>> divs2;
    for (int idx : order) {
      xs2.push_back(xs[idx]);
      divs2.push_back(std::move(divs[idx]));
    }
    xs = std::move(xs2);
    divs = std::move(divs2);
    // Only positive values at the first point: h and -h divide together.
    std::vector<Int> pos;
    for (const auto& v : divs[0])
      if (v > 0) pos.push_back(v);
    divs[0] = std::move(pos);
    // Lagrange basis for the chosen points.
    for (size_t i = 0; i < xs.size(); ++i) {
      PolyQ li{Rat(1)};
      for (size_t j = 0; j < xs.size(); ++j) {
        if (i == j) continue;
        // (x - xj) / (xi - xj)
        Rat denom(xs[i] - xs[j]);
        li = li * PolyQ{Rat(-xs[j]) / denom, Rat(1) / denom};
      }
      lagrange.push_back(li);
    }
  }

  std::optional<PolyZ> run() {
    std::vector<Int> pick(xs.size());
    std::optional<PolyZ> out;
    dfs(0, pick, out);
    return out;
  }

  bool dfs(size_t level, std::vector<Int>& pick, std::optional<PolyZ>& out) {
    if (--budget < 0) throw Unsupported("factor search budget exceeded");
    if (level == xs.size()) {
      std::vector<Rat> coeffs(size_t(d) + 1);
      for (size_t i = 0; i < xs.size(); ++i)
        for (int j = 0; j <= d; ++j) coeffs[j] += lagrange[i].coeff(j) * Rat(pick[i]);
      PolyQ hq(std::move(coeffs));
      if (hq.degree() != d) return false;
      auto hz = to_polyz(hq);
      if (!hz) return false;
      auto quot = divide_exact(g, *hz);
      if (!quot) return false;
      out = hz->primitive_part();
      return true;
    }
    for (const auto& v : divs[level]) {
      bool ok = true;
      for (size_t j = 0; j < level; ++j) {
        Int step = xs[level] - xs[j];
        if (step == 1 || step == -1) continue;
        if ((pick[j] - v) % step != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pick[level] = v;
      if (dfs(level + 1, pick, out)) return true;
    }
    return false;
  }
};

/// Factors a primitive squarefree polynomial with positive leading coefficient
/// and no rational roots into irreducibles.
std::vector<PolyZ> factor_squarefree_core(PolyZ g) {
  std::vector<PolyZ> out;
  int d = 2;
  while (g.degree() >= 2 * d) {
    KroneckerSearch search(g, d);
    if (auto h = search.run()) {
      out.push_back(*h);
      g = divide_exact(g, *h).value().primitive_part();
    } else {
      ++d;
    }
  }
  if (g.degree() >= 1) out.push_back(g);
  return out;
}

}  // namespace

PolyZ FactorizationZ::expand() const {
  PolyZ p(std::vector<Int>{content});
  for (const auto& [f, mult] : factors)
    for (int i = 0; i < mult; ++i) p = p * f;
  return p;
}

FactorizationZ factor_over_Z(const PolyZ& p) {
  if (p.is_zero()) throw InvalidInput("factorization of the zero polynomial");
  FactorizationZ out;
  out.content = p.lc() < 0 ? Int(-p.content()) : p.content();
  if (p.degree() == 0) return out;
  std::map<PolyZ, int, decltype([](const PolyZ& a, const PolyZ& b) {
             if (a.degree() != b.degree()) return a.degree() < b.degree();
             return a.coeffs() < b.coeffs();
           })>
      counts;
  for (const auto& part : squarefree_decomposition(p)) {
    std::vector<PolyZ> irr;
    PolyZ rest = strip_rational_roots(part.poly, irr);
    if (rest.degree() >= 1) {
      auto more = factor_squarefree_core(rest);
      irr.insert(irr.end(), more.begin(), more.end());
    }
    for (const auto& f : irr) counts[f] += part.multiplicity;
  }
  for (auto& [f, m] : counts) out.factors.emplace_back(f, m);
  return out;
}

// ---------------------------------------------------------------------------
// Resultants

namespace {

Int bareiss_det(std::vector<std::vector<Int>> m) {
  int n = int(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
        assert(r == 0);
        m[i][j] = q;
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

Int resultant(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int n = a.degree(), m = b.degree();
  if (n == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.lc().get_mpz_t(), m);
    return r;
  }
  if (m == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.lc().get_mpz_t(), n);
    return r;
  }
  std::vector<std::vector<Int>> syl(size_t(n) + m, std::vector<Int>(size_t(n) + m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) syl[i][i + j] = a.coeff(n - j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) syl[size_t(m) + i][i + j] = b.coeff(m - j);
  return bareiss_det(std::move(syl));
}

PolyZ root_product_poly(const PolyZ& p) {
  if (p.is_zero() || p.coeff(0) == 0)
    throw InvalidInput("root_product_poly requires p(0) != 0");
  int d = p.degree();
  if (d == 0) return PolyZ{1};
  int n = d * d;
  // q(y) = Res_x(p(x), sum_k p_k y^k x^(d-k)); evaluate at n+1 integer points
  // and interpolate by Newton divided differences.
  std::vector<Rat> ys, vals;
  for (int t = 0; t <= n; ++t) {
    long y = (t + 1) / 2 * ((t % 2) ? 1 : -1);
    Int ypow = 1;
    std::vector<Int> rev(size_t(d) + 1);
    for (int k = 0; k <= d; ++k) {
      rev[size_t(d) - k] = p.coeff(k) * ypow;
      ypow *= y;
    }
    ys.emplace_back(y);
    vals.emplace_back(resultant(p, PolyZ(std::move(rev))));
  }
  // Newton interpolation.
  std::vector<Rat> dd = vals;
  for (int j = 1; j <= n; ++j)
    for (int i = n; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (ys[i] - ys[size_t(i) - j]);
  PolyQ q{dd[size_t(n)]};
  for (int i = n - 1; i >= 0; --i) q = q * PolyQ{-ys[size_t(i)], Rat(1)} + PolyQ{dd[size_t(i)]};
  auto qz = to_polyz(q);
  if (!qz) throw Error("root product interpolation produced fractional coefficients");
  return *qz;
}

// ---------------------------------------------------------------------------
// Cyclotomic recognition

namespace {

int totient(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

/// x * a mod f for monic f, coefficients reduced exactly.
std::vector<Int> mul_x_mod(const std::vector<Int>& a, const PolyZ& f) {
  int d = f.degree();
  auto r = std::vector<Int>(size_t(d));
  Int top = a[size_t(d) - 1];
  for (int i = d - 1; i >= 1; --i) r[size_t(i)] = a[size_t(i) - 1] - top * f.coeff(i);
  r[0] = -top * f.coeff(0);
  return r;
}

}  // namespace

std::optional<int> cyclotomic_order(const PolyZ& f) {
  if (f.degree() < 1 || !f.is_monic()) return std::nullopt;
  int d = f.degree();
  int kmax = std::max(2 * d * d, 4);
  auto xpow = std::vector<Int>(size_t(d));  // x^1 mod f (d >= 1)
  if (d == 1)
    xpow[0] = -f.coeff(0);
  else
    xpow[1] = 1;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) xpow = mul_x_mod(xpow, f);
    bool is_one = xpow[0] == 1;
    for (int i = 1; i < d && is_one; ++i) is_one = xpow[size_t(i)] == 0;
    if (is_one) {
      if (totient(k) != d) return std::nullopt;  // f divides x^k-1 but is reducible
      return k;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sturm sequences

SturmSequence::SturmSequence(const PolyQ& p) {
  seq_.push_back(p);
  if (p.degree() >= 1) {
    seq_.push_back(p.derivative());
    while (seq_.back().degree() >= 1) {
      PolyQ r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
      if (r.is_zero()) break;
      seq_.push_back(-r);
    }
  }
}

int SturmSequence::variations(const Rat& x) const {
  int v = 0, last = 0;
  for (const auto& q : seq_) {
    Rat val = q.eval(x);
    int s = val > 0 ? 1 : (val < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::variations_at_plus_inf() const {
  int v = 0, last = 0;
  for (const auto& q : seq_) {
    if (q.is_zero()) continue;
    int s = q.lc() > 0 ? 1 : -1;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::variations_at_minus_inf() const {
  int v = 0, last = 0;
  for (const auto& q : seq_) {
    if (q.is_zero()) continue;
    int s = q.lc() > 0 ? 1 : -1;
    if (q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::count_roots(const Rat& a, const Rat& b) const {
  if (a >= b) throw InvalidInput("empty interval in root count");
  return variations(a) - variations(b);
}

Rat cauchy_root_bound(const PolyZ& p) {
  if (p.degree() < 1) return 1;
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rat c = abs(Rat(p.coeff(i), p.lc()));
    if (c > m) m = c;
  }
  return m + 1;
}

// ---------------------------------------------------------------------------
// Matrix characteristic data

PolyQ char_poly(const RatMatrix& a) {
  if (!a.is_square()) throw InvalidInput("char_poly of non-square matrix");
  int n = a.rows();
  std::vector<Rat> c(size_t(n) + 1);
  c[size_t(n)] = 1;
  RatMatrix mk = RatMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    if (k == 1) {
      mk = a;
    } else {
      RatMatrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c[size_t(n) - k + 1];
      mk = a * shifted;
    }
    c[size_t(n) - k] = -mk.trace() / Rat(k);
  }
  return PolyQ(std::move(c));
}

PolyZ char_poly_z(const RatMatrix& a) {
  if (!a.is_integral()) throw InvalidInput("char_poly_z requires integer entries");
  auto p = to_polyz(char_poly(a));
  if (!p) throw Error("characteristic polynomial of an integer matrix must be integral");
  return *p;
}

PolyQ min_poly(const RatMatrix& a) {
  if (!a.is_square()) throw InvalidInput("min_poly of non-square matrix");
  int n = a.rows();
  std::vector<RatMatrix> powers{RatMatrix::identity(n)};
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * a);
  for (int k = 1; k <= n; ++k) {
    RatMatrix sys(n * n, k);
    std::vector<Rat> rhs(size_t(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int t = 0; t < k; ++t) sys.at(i * n + j, t) = powers[size_t(t)].at(i, j);
        rhs[size_t(i) * n + j] = powers[size_t(k)].at(i, j);
      }
    if (auto sol = sys.solve(rhs)) {
      std::vector<Rat> c(size_t(k) + 1);
      for (int t = 0; t < k; ++t) c[size_t(t)] = -(*sol)[size_t(t)];
      c[size_t(k)] = 1;
      return PolyQ(std::move(c));
    }
  }
  throw Error("minimal polynomial search failed");  // unreachable: k = n always solves
}

PolyZ min_poly_z(const RatMatrix& a) {
  if (!a.is_integral()) throw InvalidInput("min_poly_z requires integer entries");
  auto p = to_polyz(min_poly(a));
  if (!p) throw Error("minimal polynomial of an integer matrix must be integral");
  return *p;
}

RatMatrix apply_poly(const PolyQ& p, const RatMatrix& a) {
  if (!a.is_square()) throw InvalidInput("apply_poly needs a square matrix");
  RatMatrix acc(a.rows(), a.cols());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * a;
    for (int k = 0; k < a.rows(); ++k) acc.at(k, k) += p.coeff(i);
  }
  return acc;
}

RatMatrix apply_poly(const PolyZ& p, const RatMatrix& a) { return apply_poly(to_polyq(p), a); }

std::optional<unsigned long> matrix_order(const RatMatrix& a) {
  if (!a.is_square() || !a.is_integral())
    throw InvalidInput("matrix_order requires a square integer matrix");
  Rat d = a.det();
  if (d != 1 && d != -1) throw InvalidInput("matrix_order requires |det| = 1");
  PolyZ m = min_poly_z(a);
  if (gcd_z(m, m.derivative()).degree() > 0) return std::nullopt;  // not semisimple
  unsigned long order = 1;
  for (const auto& [f, mult] : factor_over_Z(m).factors) {
    auto k = cyclotomic_order(f);
    if (!k) return std::nullopt;
    order = std::lcm(order, static_cast<unsigned long>(*k));
  }
  if (!matrix_power(a, order).is_identity())
    throw Error("matrix_order verification failed");
  return order;
}

}  // namespace lcp
