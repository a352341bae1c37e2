#include "qdeform/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qdeform {

namespace ipoly {

IPoly make(std::initializer_list<long> coeffs) {
  IPoly p;
  for (long c : coeffs) p.emplace_back(c);
  trim(p);
  return p;
}

void trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const IPoly& p) { return p.empty(); }

bool is_one(const IPoly& p) { return p.size() == 1 && p[0] == 1; }

IPoly add(const IPoly& a, const IPoly& b) {
  IPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IPoly sub(const IPoly& a, const IPoly& b) {
  IPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

IPoly neg(const IPoly& a) {
  IPoly r(a);
  for (auto& c : r) c = -c;
  return r;
}

IPoly mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

IPoly mul_scalar(const IPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  IPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

IPoly shift(const IPoly& a, int k) {
  if (a.empty()) return {};
  IPoly r(a.size() + k, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

mpz_class content(const IPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IPoly primitive_part(const IPoly& p) {
  if (p.empty()) return {};
  mpz_class c = content(p);
  if (p.back() < 0) c = -c;
  IPoly r(p);
  for (auto& x : r) x /= c;
  return r;
}

IPoly divexact(const IPoly& a, const IPoly& b) {
  if (b.empty()) throw error("ipoly: division by zero polynomial");
  if (a.empty()) return {};
  IPoly rem(a), q(a.size() - b.size() + 1, mpz_class(0));
  while (!rem.empty() && rem.size() >= b.size()) {
    mpz_class c = rem.back() / b.back();
    if (c * b.back() != rem.back())
      throw error("ipoly: division not exact");
    size_t k = rem.size() - b.size();
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
    trim(rem);
  }
  if (!rem.empty()) throw error("ipoly: division not exact (remainder)");
  trim(q);
  return q;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
static IPoly prem(IPoly a, const IPoly& b) {
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    mpz_class la = a.back();
    size_t k = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= la * b[i];
    trim(a);
  }
  return a;
}

IPoly gcd(const IPoly& a, const IPoly& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  IPoly x = primitive_part(a), y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IPoly r = primitive_part(prem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IPoly cyclotomic(int n) {
  static std::map<int, IPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  IPoly num(n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto jt = cache.find(d);
    IPoly phi_d;
    if (jt != cache.end()) {
      phi_d = jt->second;
    } else {
      // recurse without the lock gymnastics: divisors are computed in
      // increasing order below anyway, so compute directly
      IPoly nd(d + 1, mpz_class(0));
      nd[0] = -1;
      nd[d] = 1;
      for (int e = 1; e < d; ++e)
        if (d % e == 0) nd = divexact(nd, cache.at(e));
      cache[d] = nd;
      phi_d = nd;
    }
    num = divexact(num, phi_d);
  }
  cache[n] = num;
  return num;
}

std::string str(const IPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    if (p[i] == 0) continue;
    mpz_class c = p[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << var;
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace ipoly

// ---------------------------------------------------------------------------
// Rational-coefficient helpers, used only inside cyclotomic inversion.

namespace {

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qfrom(const IPoly& p) {
  QPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.emplace_back(c);
  return r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qtrim(r);
  return r;
}

// a = q*b + r with deg r < deg b
std::pair<QPoly, QPoly> qdivrem(QPoly a, const QPoly& b) {
  QPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, mpq_class(0));
  while (!a.empty() && a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    size_t k = a.size() - b.size();
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
    qtrim(a);
  }
  qtrim(q);
  return {q, a};
}

}  // namespace

// ---------------------------------------------------------------------------

Field Field::cyclotomic(int n) {
  if (n < 1) throw error("cyclotomic order must be positive");
  return Field{FieldKind::cyclotomic, n};
}

std::string Field::str() const {
  switch (kind) {
    case FieldKind::rational:
      return "Q";
    case FieldKind::rational_function:
      return "Q(q)";
    case FieldKind::cyclotomic:
      return "Q(zeta_" + std::to_string(cyclotomic_order) + ")";
  }
  return "?";
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw error("scalar kind mismatch: " + field_.str() + " vs " +
                o.field_.str());
}

void Scalar::normalize_rf() {
  if (ipoly::is_zero(den_)) throw error("scalar: division by zero");
  if (ipoly::is_zero(num_)) {
    den_ = ipoly::make({1});
    return;
  }
  int sign = (num_.back() < 0 ? -1 : 1) * (den_.back() < 0 ? -1 : 1);
  IPoly pn = ipoly::primitive_part(num_), pd = ipoly::primitive_part(den_);
  IPoly g = ipoly::gcd(pn, pd);
  if (!ipoly::is_one(g)) {
    pn = ipoly::divexact(pn, g);
    pd = ipoly::divexact(pd, g);
  }
  mpz_class cn = ipoly::content(num_), cd = ipoly::content(den_);
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  cn /= cg;
  cd /= cg;
  if (sign < 0) cn = -cn;
  num_ = ipoly::mul_scalar(pn, cn);
  den_ = ipoly::mul_scalar(pd, cd);
}

void Scalar::normalize_cyc() {
  using ipoly::trim;
  const IPoly phi = ipoly::cyclotomic(field_.cyclotomic_order);
  // reduce modulo the monic Phi_N: exact integer division steps
  while (!cnum_.empty() && cnum_.size() >= phi.size()) {
    mpz_class c = cnum_.back();
    size_t k = cnum_.size() - phi.size();
    for (size_t i = 0; i < phi.size(); ++i) cnum_[k + i] -= c * phi[i];
    trim(cnum_);
  }
  if (cden_ == 0) throw error("scalar: division by zero");
  if (cnum_.empty()) {
    cden_ = 1;
    return;
  }
  if (cden_ < 0) {
    cnum_ = ipoly::neg(cnum_);
    cden_ = -cden_;
  }
  mpz_class g;
  mpz_class cn = ipoly::content(cnum_);
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cden_.get_mpz_t());
  if (g > 1) {
    for (auto& c : cnum_) c /= g;
    cden_ /= g;
  }
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  switch (f.kind) {
    case FieldKind::rational:
      s.rat_ = 0;
      break;
    case FieldKind::rational_function:
      s.num_ = {};
      s.den_ = ipoly::make({1});
      break;
    case FieldKind::cyclotomic:
      s.cnum_ = {};
      s.cden_ = 1;
      break;
  }
  return s;
}

Scalar Scalar::one(const Field& f) { return integer(f, 1); }

Scalar Scalar::integer(const Field& f, long n) {
  Scalar s = zero(f);
  switch (f.kind) {
    case FieldKind::rational:
      s.rat_ = n;
      break;
    case FieldKind::rational_function:
      if (n != 0) s.num_ = ipoly::make({n});
      break;
    case FieldKind::cyclotomic:
      if (n != 0) s.cnum_ = ipoly::make({n});
      break;
  }
  return s;
}

Scalar Scalar::rational(const Field& f, long num, long den) {
  return integer(f, num) / integer(f, den);
}

Scalar Scalar::generator(const Field& f) {
  Scalar s = zero(f);
  switch (f.kind) {
    case FieldKind::rational:
      throw error("the rationals have no distinguished generator");
    case FieldKind::rational_function:
      s.num_ = ipoly::make({0, 1});
      break;
    case FieldKind::cyclotomic:
      s.cnum_ = ipoly::make({0, 1});
      s.normalize_cyc();
      break;
  }
  return s;
}

Scalar Scalar::root_of_unity(const Field& f, long k) {
  if (f.kind != FieldKind::cyclotomic)
    throw error("root_of_unity requires a cyclotomic field");
  long n = f.cyclotomic_order;
  k %= n;
  if (k < 0) k += n;
  Scalar s = zero(f);
  IPoly p(static_cast<size_t>(k) + 1, mpz_class(0));
  p[k] = 1;
  s.cnum_ = p;
  s.normalize_cyc();
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r = zero(field_);
  switch (field_.kind) {
    case FieldKind::rational:
      r.rat_ = rat_ + o.rat_;
      break;
    case FieldKind::rational_function:
      r.num_ = ipoly::add(ipoly::mul(num_, o.den_), ipoly::mul(o.num_, den_));
      r.den_ = ipoly::mul(den_, o.den_);
      r.normalize_rf();
      break;
    case FieldKind::cyclotomic:
      r.cnum_ = ipoly::add(ipoly::mul_scalar(cnum_, o.cden_),
                           ipoly::mul_scalar(o.cnum_, cden_));
      r.cden_ = cden_ * o.cden_;
      r.normalize_cyc();
      break;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r(*this);
  switch (field_.kind) {
    case FieldKind::rational:
      r.rat_ = -rat_;
      break;
    case FieldKind::rational_function:
      r.num_ = ipoly::neg(num_);
      break;
    case FieldKind::cyclotomic:
      r.cnum_ = ipoly::neg(cnum_);
      break;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r = zero(field_);
  switch (field_.kind) {
    case FieldKind::rational:
      r.rat_ = rat_ * o.rat_;
      break;
    case FieldKind::rational_function:
      r.num_ = ipoly::mul(num_, o.num_);
      r.den_ = ipoly::mul(den_, o.den_);
      r.normalize_rf();
      break;
    case FieldKind::cyclotomic:
      r.cnum_ = ipoly::mul(cnum_, o.cnum_);
      r.cden_ = cden_ * o.cden_;
      r.normalize_cyc();
      break;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw error("scalar: division by zero");
  Scalar r = zero(field_);
  switch (field_.kind) {
    case FieldKind::rational:
      r.rat_ = 1 / rat_;
      break;
    case FieldKind::rational_function:
      r.num_ = den_;
      r.den_ = num_;
      r.normalize_rf();
      break;
    case FieldKind::cyclotomic: {
      // extended Euclid in Q[x] against the irreducible Phi_N
      const IPoly phi = ipoly::cyclotomic(field_.cyclotomic_order);
      QPoly r0 = qfrom(phi), r1 = qfrom(cnum_);
      QPoly t0 = {}, t1 = {mpq_class(1)};
      while (!(r1.size() == 1 || r1.empty())) {
        auto [q, rem] = qdivrem(r0, r1);
        QPoly t2 = qsub(t0, qmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
      }
      if (r1.empty()) throw error("scalar: division by zero");
      // num/cden inverse = cden * t1 / r1[0]; clear rational denominators
      mpq_class lead = r1[0];
      mpz_class common = 1;
      for (auto& c : t1) {
        c = c * cden_ / lead;
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
                c.get_den().get_mpz_t());
      }
      IPoly num;
      num.reserve(t1.size());
      for (auto& c : t1) {
        mpq_class v = c * common;
        num.emplace_back(v.get_num());
      }
      ipoly::trim(num);
      r.cnum_ = std::move(num);
      r.cden_ = common;
      r.normalize_cyc();
      break;
    }
  }
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = one(field_), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::is_zero() const {
  switch (field_.kind) {
    case FieldKind::rational:
      return rat_ == 0;
    case FieldKind::rational_function:
      return ipoly::is_zero(num_);
    case FieldKind::cyclotomic:
      return ipoly::is_zero(cnum_);
  }
  return false;
}

bool Scalar::is_one() const {
  switch (field_.kind) {
    case FieldKind::rational:
      return rat_ == 1;
    case FieldKind::rational_function:
      return ipoly::is_one(num_) && ipoly::is_one(den_);
    case FieldKind::cyclotomic:
      return ipoly::is_one(cnum_) && cden_ == 1;
  }
  return false;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  switch (field_.kind) {
    case FieldKind::rational:
      return rat_ == o.rat_;
    case FieldKind::rational_function:
      return num_ == o.num_ && den_ == o.den_;
    case FieldKind::cyclotomic:
      return cnum_ == o.cnum_ && cden_ == o.cden_;
  }
  return false;
}

static int cmp_ipoly(const IPoly& a, const IPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    int c = mpz_cmp(a[i].get_mpz_t(), b[i].get_mpz_t());
    if (c != 0) return c;
  }
  return 0;
}

bool Scalar::operator<(const Scalar& o) const {
  check_same_field(o);
  switch (field_.kind) {
    case FieldKind::rational:
      return rat_ < o.rat_;
    case FieldKind::rational_function: {
      int c = cmp_ipoly(num_, o.num_);
      if (c != 0) return c < 0;
      return cmp_ipoly(den_, o.den_) < 0;
    }
    case FieldKind::cyclotomic: {
      int c = cmp_ipoly(cnum_, o.cnum_);
      if (c != 0) return c < 0;
      return cden_ < o.cden_;
    }
  }
  return false;
}

Scalar Scalar::specialize(int n) const {
  if (field_.kind != FieldKind::rational_function)
    throw error("specialize expects an element of Q(q)");
  Field f = Field::cyclotomic(n);
  auto eval = [&](const IPoly& p) {
    Scalar v = zero(f);
    v.cnum_ = p;
    v.normalize_cyc();
    return v;
  };
  Scalar d = eval(den_);
  if (d.is_zero())
    throw error("specialize: pole at zeta_" + std::to_string(n));
  return eval(num_) / d;
}

std::string Scalar::str() const {
  switch (field_.kind) {
    case FieldKind::rational:
      return rat_.get_str();
    case FieldKind::rational_function: {
      std::string n = ipoly::str(num_, "q");
      if (ipoly::is_one(den_)) return n;
      std::string d = ipoly::str(den_, "q");
      auto wrap = [](const std::string& s) {
        return s.find(' ') != std::string::npos ||
                       s.find('*') != std::string::npos
                   ? "(" + s + ")"
                   : s;
      };
      return wrap(n) + "/" + wrap(d);
    }
    case FieldKind::cyclotomic: {
      std::string n = ipoly::str(cnum_, "z");
      if (cden_ == 1) return n;
      bool multi = n.find(' ') != std::string::npos;
      return (multi ? "(" + n + ")" : n) + "/" + cden_.get_str();
    }
  }
  return "?";
}

Scalar q_integer(int m, const Scalar& v) {
  // [m]_v = v^{m-1} + v^{m-3} + ... + v^{1-m};  [-m]_v = -[m]_v
  if (m < 0) return -q_integer(-m, v);
  Scalar r = Scalar::zero(v.field());
  for (int j = 0; j < m; ++j) r += v.pow(m - 1 - 2 * j);
  return r;
}

Scalar gauss_binomial(int n, int k, const Scalar& v) {
  if (k < 0 || k > n) throw error("gauss_binomial: need 0 <= k <= n");
  if (v.is_zero()) throw error("gauss_binomial: base must be invertible");
  k = std::min(k, n - k);
  Scalar num = Scalar::one(v.field()), den = num;
  for (int i = 1; i <= k; ++i) {
    num = num * q_integer(n - k + i, v);
    den = den * q_integer(i, v);
  }
  if (den.is_zero())
    throw error("gauss_binomial: q-factorial denominator vanishes");
  return num / den;
}

}  // namespace qdeform
