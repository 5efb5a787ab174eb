#include "grass/gf.hpp"

#include <algorithm>
#include <string>

namespace grass {

namespace {

struct OrderInfo {
  int q, p, e;
  std::vector<int> modulus;
};

const OrderInfo* order_info(int q) {
  static const std::vector<OrderInfo> table = {
      {2, 2, 1, {0, 1}},    {3, 3, 1, {0, 1}},       {4, 2, 2, {1, 1, 1}},
      {5, 5, 1, {0, 1}},    {7, 7, 1, {0, 1}},       {8, 2, 3, {1, 1, 0, 1}},
      {9, 3, 2, {2, 1, 1}},
  };
  for (const auto& o : table)
    if (o.q == q) return &o;
  return nullptr;
}

std::vector<int> digits(int a, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

// Polynomial helpers over GF(q); coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<Elem>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(const Field& f, Poly a, const Poly& m) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const Elem lead_inv = f.inv(m.back());
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const Elem c = f.mul(a.back(), lead_inv);
    for (int i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  return poly_mod(f, std::move(r), m);
}

Poly poly_powmod(const Field& f, Poly a, std::uint64_t e, const Poly& m) {
  Poly r{1};
  a = poly_mod(f, std::move(a), m);
  while (e) {
    if (e & 1) r = poly_mulmod(f, r, a, m);
    a = poly_mulmod(f, a, a, m);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^{q^j} mod m
Poly x_qpow(const Field& f, int j, const Poly& m) {
  Poly r = poly_mod(f, Poly{0, 1}, m);
  for (int i = 0; i < j; ++i) r = poly_powmod(f, r, static_cast<std::uint64_t>(f.q()), m);
  return r;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool supported_order(int q) { return order_info(q) != nullptr; }

Field::Field(int q) {
  const OrderInfo* info = order_info(q);
  if (!info) throw Error(Errc::UnsupportedOrder, "q=" + std::to_string(q));
  q_ = info->q;
  p_ = info->p;
  e_ = info->e;
  modulus_ = info->modulus;

  for (int a = 0; a < q_; ++a) {
    auto da = digits(a, p_, e_);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b, p_, e_);
      std::vector<int> s(e_);
      for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * 16 + b] = static_cast<Elem>(undigits(s, p_));

      std::vector<int> prod(2 * e_, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int d = 2 * e_ - 1; d >= e_; --d) {
        const int c = prod[d];
        if (!c) continue;
        for (int i = 0; i <= e_; ++i)
          prod[d - e_ + i] = ((prod[d - e_ + i] - c * modulus_[i]) % p_ + p_) % p_;
      }
      prod.resize(e_);
      mul_[a * 16 + b] = static_cast<Elem>(undigits(prod, p_));
    }
  }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      if (add_[a * 16 + b] == 0) neg_[a] = static_cast<Elem>(b);
      if (mul_[a * 16 + b] == 1) inv_[a] = static_cast<Elem>(b);
    }

  // smallest primitive element
  for (int g = 1; g < q_; ++g) {
    int x = 1, ord = 0;
    do {
      x = mul_[x * 16 + g];
      ++ord;
    } while (x != 1);
    if (ord == q_ - 1 || q_ == 2) {
      x = 1;
      for (int i = 0; i < q_ - 1; ++i) {
        exp_[i] = static_cast<Elem>(x);
        log_[x] = i;
        x = mul_[x * 16 + g];
      }
      break;
    }
  }

  // Exhaustive axiom check; at most 9^3 triples.
  for (int a = 0; a < q_; ++a) {
    if (a && mul(a, inv_[a]) != 1) throw Error(Errc::UnsupportedOrder, "inverse table");
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
        throw Error(Errc::UnsupportedOrder, "commutativity");
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)) || mul(mul(a, b), c) != mul(a, mul(b, c)) ||
            mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw Error(Errc::UnsupportedOrder, "field axioms");
      }
    }
  }
}

bool is_irreducible(const Field& f, const std::vector<Elem>& poly) {
  Poly m = poly;
  trim(m);
  const int d = static_cast<int>(m.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  Poly x{0, 1};
  Poly t = x_qpow(f, d, m);
  Poly diff = t;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = f.sub(diff[1], 1);
  trim(diff);
  if (!diff.empty()) return false;
  for (int r : prime_divisors(d)) {
    Poly u = x_qpow(f, d / r, m);
    u.resize(std::max<std::size_t>(u.size(), 2), 0);
    u[1] = f.sub(u[1], 1);
    trim(u);
    Poly g = poly_gcd(f, m, u);
    if (g.size() != 1) return false;
  }
  return true;
}

ExtField::ExtField(const Field& base, int m) : base_(base), m_(m) {
  if (m < 1 || m > 16) throw Error(Errc::DegreeTooLarge, "m=" + std::to_string(m));
  order_ = 1;
  for (int i = 0; i < m; ++i) order_ *= static_cast<std::uint64_t>(base.q());

  if (m == 1) {
    modulus_ = {0, 1};
    return;
  }
  const int q = base.q();
  std::vector<Elem> cand(m + 1, 0);
  cand[m] = 1;
  for (std::uint64_t idx = 0; idx < order_; ++idx) {
    std::uint64_t t = idx;
    for (int i = 0; i < m; ++i) {
      cand[i] = static_cast<Elem>(t % q);
      t /= q;
    }
    if (cand[0] == 0) continue;
    if (is_irreducible(base, cand)) {
      modulus_ = cand;
      return;
    }
  }
  throw Error(Errc::DegreeTooLarge, "no irreducible found");
}

ExtElem ExtField::one() const {
  ExtElem r = zero();
  r(0) = 1;
  return r;
}

ExtElem ExtField::x() const { return m_ == 1 ? one() : basis(1); }

ExtElem ExtField::basis(int l) const {
  ExtElem r = zero();
  r(l) = 1;
  return r;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
  ExtElem r(m_);
  for (int i = 0; i < m_; ++i) r(i) = base_.add(a(i), b(i));
  return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
  ExtElem r(m_);
  for (int i = 0; i < m_; ++i) r(i) = base_.sub(a(i), b(i));
  return r;
}

ExtElem ExtField::scale(Elem c, const ExtElem& a) const {
  ExtElem r(m_);
  for (int i = 0; i < m_; ++i) r(i) = base_.mul(c, a(i));
  return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
  std::vector<Elem> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (!a(i)) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a(i), b(j)));
  }
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    const Elem c = prod[d];
    if (!c) continue;
    for (int i = 0; i <= m_; ++i)
      prod[d - m_ + i] = base_.sub(prod[d - m_ + i], base_.mul(c, modulus_[i]));
  }
  ExtElem r(m_);
  for (int i = 0; i < m_; ++i) r(i) = prod[i];
  return r;
}

ExtElem ExtField::pow(const ExtElem& a, std::uint64_t e) const {
  ExtElem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t ExtField::index(const ExtElem& a) const {
  std::uint64_t r = 0;
  for (int i = m_ - 1; i >= 0; --i) r = r * static_cast<std::uint64_t>(base_.q()) + a(i);
  return r;
}

ExtElem ExtField::from_index(std::uint64_t idx) const {
  ExtElem r(m_);
  for (int i = 0; i < m_; ++i) {
    r(i) = static_cast<Elem>(idx % static_cast<std::uint64_t>(base_.q()));
    idx /= static_cast<std::uint64_t>(base_.q());
  }
  return r;
}

ExtElem frobenius(const ExtField& ctx, const ExtElem& x, int i) {
  ExtElem r = x;
  const int steps = ((i % ctx.m()) + ctx.m()) % ctx.m();
  for (int s = 0; s < steps; ++s) r = ctx.pow(r, static_cast<std::uint64_t>(ctx.base().q()));
  return r;
}

Matrix expand_rows(const ExtField& ctx, const std::vector<ExtElem>& v) {
  Matrix out(ctx.m(), static_cast<Eigen::Index>(v.size()));
  for (std::size_t j = 0; j < v.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = v[j];
  return out;
}

}  // namespace grass
