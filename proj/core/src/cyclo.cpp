/*
 * Copyright 2026 The hypst Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hypst/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <utility>

#include "hypst/errors.hpp"
#include "hypst/ntheory.hpp"

namespace hypst {

namespace detail {

struct CycloContext {
  std::int64_t n = 1;
  std::int64_t phi = 1;
  IntPoly poly;
  // Nonzero coefficients of Phi_n below the leading term.
  std::vector<std::pair<std::int64_t, mpz_class>> low_terms;
};

}  // namespace detail

namespace {

using detail::CycloContext;

void trim(IntPoly& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact quotient of a by a monic divisor b.
IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const mpz_class c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::int64_t, IntPoly>& poly_cache() {
  static std::map<std::int64_t, IntPoly> cache;
  return cache;
}

std::map<std::int64_t, std::shared_ptr<const CycloContext>>& context_cache() {
  static std::map<std::int64_t, std::shared_ptr<const CycloContext>> cache;
  return cache;
}

// Caller holds cache_mutex().
IntPoly cyclotomic_poly_locked(std::int64_t n) {
  auto& cache = poly_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  IntPoly xn1(static_cast<std::size_t>(n) + 1, 0);
  xn1[0] = -1;
  xn1[static_cast<std::size_t>(n)] = 1;
  IntPoly denom{1};
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;
    denom = poly_mul(denom, cyclotomic_poly_locked(d));
  }
  IntPoly result = poly_div_exact(std::move(xn1), denom);
  trim(result);
  cache.emplace(n, result);
  return result;
}

std::shared_ptr<const CycloContext> context_for(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic conductor must be positive");
  std::lock_guard lock(cache_mutex());
  auto& cache = context_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  auto ctx = std::make_shared<CycloContext>();
  ctx->n = n;
  ctx->poly = cyclotomic_poly_locked(n);
  ctx->phi = static_cast<std::int64_t>(ctx->poly.size()) - 1;
  for (std::int64_t i = 0; i < ctx->phi; ++i) {
    if (ctx->poly[i] != 0) ctx->low_terms.emplace_back(i, ctx->poly[i]);
  }
  cache.emplace(n, ctx);
  return ctx;
}

// Folds exponents modulo n and divides by Phi_n; the result has length phi.
std::vector<mpz_class> reduce_full(const CycloContext& ctx, std::vector<mpz_class> full) {
  const auto n = static_cast<std::size_t>(ctx.n);
  if (full.size() > n) {
    for (std::size_t j = n; j < full.size(); ++j) full[j % n] += full[j];
    full.resize(n);
  } else {
    full.resize(n, 0);
  }
  const auto phi = static_cast<std::size_t>(ctx.phi);
  for (std::size_t j = n; j-- > phi;) {
    if (full[j] == 0) continue;
    const mpz_class c = full[j];
    full[j] = 0;
    const std::size_t shift = j - phi;
    for (const auto& [i, coeff] : ctx.low_terms) full[shift + static_cast<std::size_t>(i)] -= c * coeff;
  }
  full.resize(phi);
  return full;
}

// Polynomial arithmetic over Q, used only by the extended Euclidean inverse.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  const mpq_class lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

IntPoly cyclotomic_poly(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  std::lock_guard lock(cache_mutex());
  return cyclotomic_poly_locked(n);
}

CycloElt::CycloElt() : CycloElt(context_for(1), std::vector<mpz_class>(1, 0), 1) {}

CycloElt::CycloElt(std::shared_ptr<const detail::CycloContext> ctx, std::vector<mpz_class> num,
                   mpz_class den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycloElt::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycloElt::require_same_field(const CycloElt& rhs) const {
  if (ctx_->n != rhs.ctx_->n) {
    throw Error(ErrorKind::InvalidArgument, "conductor mismatch: " + std::to_string(ctx_->n) +
                                                " vs " + std::to_string(rhs.ctx_->n));
  }
}

CycloElt CycloElt::zero(std::int64_t n) {
  auto ctx = context_for(n);
  std::vector<mpz_class> num(static_cast<std::size_t>(ctx->phi), 0);
  return CycloElt(std::move(ctx), std::move(num), 1);
}

CycloElt CycloElt::one(std::int64_t n) { return rational(n, 1); }

CycloElt CycloElt::rational(std::int64_t n, const mpq_class& q) {
  auto ctx = context_for(n);
  std::vector<mpz_class> num(static_cast<std::size_t>(ctx->phi), 0);
  num[0] = q.get_num();
  return CycloElt(std::move(ctx), std::move(num), q.get_den());
}

CycloElt CycloElt::zeta_power(std::int64_t n, std::int64_t k) {
  auto ctx = context_for(n);
  std::vector<mpz_class> full(static_cast<std::size_t>(n), 0);
  full[static_cast<std::size_t>(mod(k, n))] = 1;
  auto num = reduce_full(*ctx, std::move(full));
  return CycloElt(std::move(ctx), std::move(num), 1);
}

CycloElt CycloElt::from_exponent_counts(std::int64_t n, std::span<const std::int64_t> counts) {
  auto ctx = context_for(n);
  std::vector<std::int64_t> folded(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < counts.size(); ++j) folded[j % static_cast<std::size_t>(n)] += counts[j];
  std::vector<mpz_class> full(folded.size());
  for (std::size_t j = 0; j < folded.size(); ++j) full[j] = static_cast<long>(folded[j]);
  auto num = reduce_full(*ctx, std::move(full));
  return CycloElt(std::move(ctx), std::move(num), 1);
}

CycloElt CycloElt::from_poly(std::int64_t n, std::span<const mpq_class> coeffs) {
  auto ctx = context_for(n);
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> full(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) full[j] = coeffs[j].get_num() * (den / coeffs[j].get_den());
  auto num = reduce_full(*ctx, std::move(full));
  return CycloElt(std::move(ctx), std::move(num), den);
}

std::int64_t CycloElt::conductor() const noexcept { return ctx_->n; }
std::int64_t CycloElt::degree() const noexcept { return ctx_->phi; }

std::vector<mpq_class> CycloElt::coeffs() const {
  std::vector<mpq_class> out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) {
    out[i] = mpq_class(num_[i], den_);
    out[i].canonicalize();
  }
  return out;
}

bool CycloElt::is_zero() const noexcept {
  for (const auto& c : num_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElt::is_one() const noexcept {
  if (den_ != 1 || num_[0] != 1) return false;
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return false;
  }
  return true;
}

std::optional<mpq_class> CycloElt::as_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return std::nullopt;
  }
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

CycloElt& CycloElt::operator+=(const CycloElt& rhs) {
  require_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycloElt& CycloElt::operator-=(const CycloElt& rhs) { return *this += -rhs; }

CycloElt CycloElt::operator-() const {
  CycloElt out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycloElt& CycloElt::operator*=(const CycloElt& rhs) {
  *this = *this * rhs;
  return *this;
}

CycloElt operator*(const CycloElt& lhs, const CycloElt& rhs) {
  lhs.require_same_field(rhs);
  const std::size_t phi = lhs.num_.size();
  std::vector<mpz_class> full(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (lhs.num_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (rhs.num_[j] == 0) continue;
      mpz_addmul(full[i + j].get_mpz_t(), lhs.num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
    }
  }
  auto num = reduce_full(*lhs.ctx_, std::move(full));
  return CycloElt(lhs.ctx_, std::move(num), lhs.den_ * rhs.den_);
}

bool operator==(const CycloElt& lhs, const CycloElt& rhs) {
  return lhs.ctx_->n == rhs.ctx_->n && lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
}

CycloElt CycloElt::conj() const {
  const auto n = static_cast<std::size_t>(ctx_->n);
  std::vector<mpz_class> full(n, 0);
  for (std::size_t j = 0; j < num_.size(); ++j) full[(n - j) % n] += num_[j];
  auto num = reduce_full(*ctx_, std::move(full));
  return CycloElt(ctx_, std::move(num), den_);
}

CycloElt CycloElt::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(ctx_->n) + ")");
  // Extended Euclid of (Phi_n, a): s1 * a = gcd (mod Phi_n), a nonzero constant
  // because Phi_n is irreducible.
  QPoly r0(ctx_->poly.begin(), ctx_->poly.end());
  QPoly r1(num_.begin(), num_.end());
  trim(r1);
  QPoly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    auto [q, r] = qpoly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly next = qpoly_sub(s0, qpoly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r1 is now the nonzero constant gcd; a * s1 = r1 modulo Phi_n.
  for (auto& c : s1) c /= r1[0];
  for (auto& c : s1) c *= den_;
  return from_poly(ctx_->n, s1);
}

CycloElt CycloElt::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  CycloElt result = one(ctx_->n);
  CycloElt base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

CycloElt CycloElt::lift(std::int64_t m) const {
  if (m < 1 || m % ctx_->n != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "cannot lift conductor " + std::to_string(ctx_->n) + " to " + std::to_string(m));
  }
  const std::int64_t step = m / ctx_->n;
  auto target = context_for(m);
  std::vector<mpz_class> full(static_cast<std::size_t>(m), 0);
  for (std::size_t j = 0; j < num_.size(); ++j) full[static_cast<std::size_t>(static_cast<std::int64_t>(j) * step % m)] += num_[j];
  auto num = reduce_full(*target, std::move(full));
  return CycloElt(std::move(target), std::move(num), den_);
}

std::complex<double> CycloElt::embed(std::int64_t k) const {
  if (std::gcd(mod(k, ctx_->n), ctx_->n) != 1) {
    throw Error(ErrorKind::NotCoprime, "embedding index " + std::to_string(k) +
                                           " is not coprime to " + std::to_string(ctx_->n));
  }
  const long double den = den_.get_d();
  std::complex<long double> acc = 0;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    const long double angle = 2.0L * std::numbers::pi_v<long double> *
                              static_cast<long double>(mod(static_cast<std::int64_t>(j) * k, ctx_->n)) /
                              static_cast<long double>(ctx_->n);
    acc += static_cast<long double>(num_[j].get_d()) * std::polar(1.0L, angle);
  }
  acc /= den;
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::string CycloElt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    mpq_class c(num_[j], den_);
    c.canonicalize();
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    if (j == 0) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << '*';
      out << 'z';
      if (j > 1) out << '^' << j;
    }
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

std::optional<std::int64_t> is_root_of_unity(const CycloElt& w) {
  if (w.is_zero()) return std::nullopt;
  const std::int64_t n = w.conductor();
  const std::int64_t bound = n % 2 == 0 ? n : 2 * n;
  if (!w.pow(bound).is_one()) return std::nullopt;
  std::int64_t order = bound;
  for (std::int64_t q : prime_factors(bound)) {
    while (order % q == 0 && w.pow(order / q).is_one()) order /= q;
  }
  return order;
}

}  // namespace hypst
