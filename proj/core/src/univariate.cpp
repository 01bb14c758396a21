#include "univariate.hpp"

#include <algorithm>

namespace conekit::detail {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<unsigned __int128>(a) * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly mod(UPoly a, const UPoly& b, u64 p) {
  trim(a);
  u64 lead_inv = inv(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    trim(a);
  }
  return a;
}

UPoly mulmod_poly(const UPoly& a, const UPoly& b, const UPoly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return mod(std::move(r), m, p);
}

UPoly powmod_poly(UPoly base, u64 e, const UPoly& m, u64 p) {
  UPoly r{1};
  base = mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = mulmod_poly(r, base, m, p);
    base = mulmod_poly(base, base, m, p);
    e >>= 1;
  }
  return r;
}

UPoly gcd(UPoly a, UPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 li = inv(a.back(), p);
    for (auto& c : a) c = mulmod(c, li, p);
  }
  return a;
}

UPoly sub(UPoly a, const UPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

UPoly divide(UPoly a, const UPoly& b, u64 p) {
  trim(a);
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 lead_inv = inv(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    trim(a);
  }
  return q;
}

// f is monic, squarefree and a product of distinct linear factors.
void split(const UPoly& f, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
  std::size_t deg = f.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    out.push_back((p - f[0]) % p);
    return;
  }
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    UPoly shifted{dist(rng), 1};
    UPoly h = sub(powmod_poly(shifted, (p - 1) / 2, f, p), UPoly{1}, p);
    UPoly g = gcd(f, h, p);
    if (g.size() > 1 && g.size() < f.size()) {
      split(g, p, rng, out);
      split(divide(f, g, p), p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> roots_mod_p(UPoly f, u64 p, std::mt19937_64& rng) {
  trim(f);
  std::vector<u64> out;
  if (f.size() <= 1) return out;
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() <= 1) return out;
  if (p < 4096) {
    for (u64 x = 0; x < p; ++x) {
      u64 v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (mulmod(v, x, p) + f[i]) % p;
      if (v == 0) out.push_back(x);
    }
    return out;
  }
  UPoly monic = f;
  u64 li = inv(monic.back(), p);
  for (auto& c : monic) c = mulmod(c, li, p);
  UPoly xp = powmod_poly(UPoly{0, 1}, p, monic, p);
  UPoly g = gcd(monic, sub(xp, UPoly{0, 1}, p), p);
  if (g.size() <= 1) return out;
  split(g, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace conekit::detail
