#include "hallq/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hallq/error.hpp"

namespace hallq::gf {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace poly {

namespace {

void trim(std::vector<int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  // p is prime and small: Fermat.
  long long r = 1, b = a % p;
  for (int n = p - 2; n > 0; n >>= 1, b = b * b % p)
    if (n & 1) r = r * b % p;
  return static_cast<int>(r);
}

}  // namespace

std::vector<int> mod(std::vector<int> a, const std::vector<int>& m, int p) {
  std::vector<int> mm = m;
  trim(mm);
  trim(a);
  const int dm = static_cast<int>(mm.size()) - 1;
  const int lead_inv = inv_mod(mm.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = static_cast<int>(static_cast<long long>(a.back()) * lead_inv % p);
    for (int j = 0; j <= dm; ++j) {
      int& t = a[static_cast<std::size_t>(shift + j)];
      t = static_cast<int>(((t - static_cast<long long>(c) * mm[static_cast<std::size_t>(j)]) % p + p) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const std::vector<int>& f_in, int p) {
  std::vector<int> f = f_in;
  trim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (int k = 1; 2 * k <= n; ++k) {
    std::int64_t count = 1;
    for (int j = 0; j < k; ++j) count *= p;
    std::vector<int> g(static_cast<std::size_t>(k) + 1, 0);
    g[static_cast<std::size_t>(k)] = 1;
    for (std::int64_t code = 0; code < count; ++code) {
      std::int64_t c = code;
      for (int j = 0; j < k; ++j, c /= p) g[static_cast<std::size_t>(j)] = static_cast<int>(c % p);
      if (mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> smallest_irreducible(int degree, int p) {
  std::int64_t count = 1;
  for (int j = 0; j < degree; ++j) count *= p;
  std::vector<int> f(static_cast<std::size_t>(degree) + 1, 0);
  f[static_cast<std::size_t>(degree)] = 1;
  for (std::int64_t code = 0; code < count; ++code) {
    std::int64_t c = code;
    for (int j = 0; j < degree; ++j, c /= p) f[static_cast<std::size_t>(j)] = static_cast<int>(c % p);
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::NoIrreducibleFound,
              "degree " + std::to_string(degree) + " over F_" + std::to_string(p));
}

}  // namespace poly

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Multiplication of coefficient vectors of length D modulo the modulus.
struct SlowMul {
  int p;
  std::vector<int> modulus;
  int D;

  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> prod(static_cast<std::size_t>(2 * D), 0);
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        prod[static_cast<std::size_t>(i + j)] =
            (prod[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p;
    auto r = poly::mod(prod, modulus, p);
    r.resize(static_cast<std::size_t>(D), 0);
    return r;
  }

  std::vector<int> pow(std::vector<int> a, std::uint64_t n) const {
    std::vector<int> r(static_cast<std::size_t>(D), 0);
    r[0] = 1;
    for (; n > 0; n >>= 1, a = mul(a, a))
      if (n & 1) r = mul(r, a);
    return r;
  }
};

bool is_one(const std::vector<int>& a) {
  if (a.empty() || a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](int c) { return c == 0; });
}

}  // namespace

std::shared_ptr<const Field> Field::make(int p, int e, int N, std::size_t max_elements) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p));
  if (e < 1 || N < 1) throw Error(ErrorKind::FieldTooLarge, "degrees must be positive");
  const int D = e * N;
  std::size_t size = 1;
  for (int j = 0; j < D; ++j) {
    size *= static_cast<std::size_t>(p);
    if (size > max_elements)
      throw Error(ErrorKind::FieldTooLarge, "p^(eN) = " + std::to_string(p) + "^" + std::to_string(D) +
                                                " exceeds " + std::to_string(max_elements) + " elements");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->e_ = e;
  f->N_ = N;
  f->q_ = 1;
  for (int j = 0; j < e; ++j) f->q_ *= p;
  f->size_ = size;
  f->modulus_ = poly::smallest_irreducible(D, p);

  SlowMul slow{p, f->modulus_, D};
  auto to_vec = [&](std::size_t idx) {
    std::vector<int> c(static_cast<std::size_t>(D), 0);
    for (int j = 0; j < D; ++j, idx /= static_cast<std::size_t>(p)) c[static_cast<std::size_t>(j)] = static_cast<int>(idx % static_cast<std::size_t>(p));
    return c;
  };
  auto to_idx = [&](const std::vector<int>& c) {
    std::size_t idx = 0;
    for (int j = D - 1; j >= 0; --j) idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(c[static_cast<std::size_t>(j)]);
    return static_cast<Elem>(idx);
  };

  // Smallest primitive element.
  const std::uint64_t group = size - 1;
  const auto factors = prime_factors(group);
  std::size_t gen = 0;
  for (std::size_t x = 1; x < size && gen == 0; ++x) {
    const auto v = to_vec(x);
    bool primitive = true;
    for (auto r : factors)
      if (is_one(slow.pow(v, group / r))) {
        primitive = false;
        break;
      }
    if (primitive) gen = x;
  }
  if (gen == 0) throw Error(ErrorKind::NoIrreducibleFound, "no primitive element (modulus not irreducible)");

  f->exp_.assign(2 * group + 1, 0);
  f->log_.assign(size, 0);
  {
    std::vector<int> cur(static_cast<std::size_t>(D), 0);
    cur[0] = 1;
    const auto g = to_vec(gen);
    for (std::uint64_t k = 0; k < group; ++k) {
      const Elem idx = to_idx(cur);
      f->exp_[k] = idx;
      f->log_[idx] = static_cast<std::uint32_t>(k);
      cur = slow.mul(cur, g);
    }
    for (std::uint64_t k = group; k < f->exp_.size(); ++k) f->exp_[k] = f->exp_[k - group];
  }

  f->neg_table_.resize(size);
  for (std::size_t a = 0; a < size; ++a) {
    auto c = to_vec(a);
    for (auto& x : c) x = (p - x) % p;
    f->neg_table_[a] = to_idx(c);
  }
  if (p != 2 && size <= 2048) {
    f->add_table_.resize(size * size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        f->add_table_[a * size + b] = f->add_digits(static_cast<Elem>(a), static_cast<Elem>(b));
  }

  f->frob_.assign(static_cast<std::size_t>(N), {});
  std::uint64_t qk = 1;
  for (int k = 1; k < N; ++k) {
    qk = qk * static_cast<std::uint64_t>(f->q_) % group;
    auto& t = f->frob_[static_cast<std::size_t>(k)];
    t.resize(size);
    t[0] = 0;
    for (std::size_t a = 1; a < size; ++a) t[a] = f->exp_[f->log_[a] * qk % group];
  }

  for (int d = 1; d <= N; ++d) {
    if (N % d != 0) continue;
    Subfield s;
    s.index.assign(size, -1);
    for (std::size_t a = 0; a < size; ++a) {
      if (f->frobenius(static_cast<Elem>(a), d) == a) {
        s.index[a] = static_cast<std::int32_t>(s.elements.size());
        s.elements.push_back(static_cast<Elem>(a));
      }
    }
    const std::uint64_t sub_group = s.elements.size() - 1;
    for (Elem a : s.elements) {
      if (a != 0 && f->order(a) == sub_group) {
        s.generator = a;
        break;
      }
    }
    std::vector<char> span(size, 0);
    span[0] = 1;
    std::vector<Elem> members{0};
    for (Elem a : s.elements) {
      if (span[a]) continue;
      s.basis.push_back(a);
      std::vector<Elem> next;
      for (Elem m : members) {
        Elem c = m;
        for (int k = 0; k < p; ++k, c = f->add(c, a)) {
          if (!span[c]) {
            span[c] = 1;
            next.push_back(c);
          }
        }
      }
      members.insert(members.end(), next.begin(), next.end());
    }
    f->subfields_.emplace(d, std::move(s));
  }
  return f;
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  Elem out = 0, scale = 1;
  const auto P = static_cast<Elem>(p_);
  for (int j = 0; j < degree(); ++j) {
    out += ((a % P + b % P) % P) * scale;
    a /= P;
    b /= P;
    scale *= P;
  }
  return out;
}

Elem Field::from_int(std::int64_t n) const {
  const std::int64_t r = ((n % p_) + p_) % p_;
  return static_cast<Elem>(r);
}

std::vector<int> Field::coeffs(Elem a) const {
  std::vector<int> c(static_cast<std::size_t>(degree()), 0);
  for (auto& x : c) {
    x = static_cast<int>(a % static_cast<Elem>(p_));
    a /= static_cast<Elem>(p_);
  }
  return c;
}

Elem Field::from_coeffs(std::span<const int> c) const {
  Elem idx = 0;
  for (std::size_t j = c.size(); j-- > 0;)
    idx = idx * static_cast<Elem>(p_) + static_cast<Elem>(((c[j] % p_) + p_) % p_);
  return idx;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint64_t group = size_ - 1;
  return exp_[(group - log_[a]) % group];
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = size_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (n % group)) % group];
}

std::uint64_t Field::order(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "order of zero");
  const std::uint64_t group = size_ - 1;
  return group / std::gcd<std::uint64_t>(log_[a], group);
}

const Field::Subfield& Field::sub(int d) const {
  auto it = subfields_.find(d);
  if (it == subfields_.end())
    throw Error(ErrorKind::DimensionMismatch,
                "F_{q^" + std::to_string(d) + "} is not a subfield of F_{q^" + std::to_string(N_) + "}");
  return it->second;
}

const std::vector<Elem>& Field::subfield(int d) const { return sub(d).elements; }

std::int32_t Field::subfield_index(int d, Elem a) const { return sub(d).index[a]; }

Elem Field::generator(int d) const { return sub(d).generator; }

const std::vector<Elem>& Field::prime_basis(int d) const { return sub(d).basis; }

}  // namespace hallq::gf
