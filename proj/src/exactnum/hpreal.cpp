#include "balkan/hpreal.hpp"

#include <algorithm>
#include <cmath>

namespace balkan {

BigInt pow10(long e) {
  if (e < 0) throw DomainError("negative power of ten");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

BigInt scaled_floor(const BigRational& x, long scale) {
  BigInt num = x.get_num() * pow10(scale);
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

BigInt round_div(const BigInt& num, const BigInt& den) {
  // nearest integer, ties away from zero
  const BigInt n = abs(num), d = abs(den);
  BigInt r;
  const BigInt t = 2 * n + d, dd = 2 * d;
  mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), dd.get_mpz_t());
  return (num < 0) != (den < 0) ? BigInt(-r) : r;
}

namespace {

BigInt ceil_div_pos(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Bring a to scale s (s <= a.scale()).
void rescale(const BigInt& mant, const BigInt& err, long from, long to, BigInt& m_out, BigInt& e_out) {
  if (from == to) {
    m_out = mant;
    e_out = err;
    return;
  }
  const BigInt p = pow10(from - to);
  mpz_fdiv_q(m_out.get_mpz_t(), mant.get_mpz_t(), p.get_mpz_t());
  e_out = ceil_div_pos(err, p) + 1;
}

struct Aligned {
  BigInt ma, ea, mb, eb;
  long digits, guard;
};

Aligned align(const HPReal& a, const HPReal& b) {
  Aligned r;
  r.guard = std::min(a.guard(), b.guard());
  const long s = std::min(a.scale(), b.scale());
  r.digits = s - r.guard;
  rescale(a.mantissa(), a.error_ulps(), a.scale(), s, r.ma, r.ea);
  rescale(b.mantissa(), b.error_ulps(), b.scale(), s, r.mb, r.eb);
  return r;
}

}  // namespace

HPReal::HPReal(BigInt mant, long digits, BigInt err_ulps, long guard)
    : mant_(std::move(mant)), digits_(digits), guard_(guard), err_(std::move(err_ulps)) {
  if (digits_ < 1) throw DomainError("HPReal needs at least one digit");
  if (guard_ < 0) throw DomainError("negative guard");
}

HPReal HPReal::from_rational(const BigRational& q, long digits, long guard) {
  const long s = digits + guard;
  BigInt num = q.get_num() * pow10(s);
  return HPReal(round_div(num, q.get_den()), digits, 1, guard);
}

HPReal HPReal::from_integer(const BigInt& n, long digits, long guard) {
  return HPReal(n * pow10(digits + guard), digits, 0, guard);
}

bool HPReal::within_budget() const { return err_ < pow10(guard_); }

HPReal HPReal::truncated(long digits) const {
  if (digits >= digits_) return *this;
  BigInt m, e;
  rescale(mant_, err_, scale(), digits + guard_, m, e);
  return HPReal(m, digits, e, guard_);
}

HPReal HPReal::operator-() const { return HPReal(-mant_, digits_, err_, guard_); }

HPReal operator+(const HPReal& a, const HPReal& b) {
  Aligned x = align(a, b);
  return HPReal(x.ma + x.mb, x.digits, x.ea + x.eb, x.guard);
}

HPReal operator-(const HPReal& a, const HPReal& b) { return a + (-b); }

HPReal operator*(const HPReal& a, const HPReal& b) {
  Aligned x = align(a, b);
  const BigInt one = pow10(x.digits + x.guard);
  BigInt prod = x.ma * x.mb;
  BigInt m;
  mpz_fdiv_q(m.get_mpz_t(), prod.get_mpz_t(), one.get_mpz_t());
  // |a||eb| + |b||ea| + ea*eb, in ulps, plus one for the truncation
  BigInt e = ceil_div_pos(abs(x.ma) * x.eb + abs(x.mb) * x.ea + x.ea * x.eb, one) + 1;
  return HPReal(m, x.digits, e, x.guard);
}

HPReal operator/(const HPReal& a, const HPReal& b) {
  Aligned x = align(a, b);
  const BigInt one = pow10(x.digits + x.guard);
  if (abs(x.mb) <= x.eb) throw DomainError("HPReal division by a value indistinguishable from zero");
  BigInt m;
  BigInt num = x.ma * one;
  mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), x.mb.get_mpz_t());
  // (ea + |q| eb) / (|b| - eb), all scaled
  BigInt e = ceil_div_pos(x.ea * one + (abs(m) + 1) * x.eb, abs(x.mb) - x.eb) + 1;
  return HPReal(m, x.digits, e, x.guard);
}

HPReal operator*(const HPReal& a, const BigInt& k) {
  return HPReal(a.mant_ * k, a.digits_, a.err_ * abs(k), a.guard_);
}

HPReal operator*(const HPReal& a, const BigRational& q) {
  BigInt num = a.mant_ * q.get_num();
  BigInt m;
  mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  BigInt e = ceil_div_pos(a.err_ * abs(q.get_num()), q.get_den()) + 1;
  return HPReal(m, a.digits_, e, a.guard_);
}

std::string HPReal::to_string(long places) const {
  places = std::min(places, digits_);
  const BigInt p = pow10(scale() - places);
  BigInt r = round_div(mant_, p);
  const bool neg = r < 0;
  std::string s = BigInt(abs(r)).get_str();
  if (places > 0) {
    if (static_cast<long>(s.size()) <= places) s.insert(0, places + 1 - s.size(), '0');
    s.insert(s.size() - places, ".");
  }
  return neg ? "-" + s : s;
}

double HPReal::to_double() const {
  const long keep = std::min<long>(scale(), 30);
  BigInt m = mant_;
  if (scale() > keep) m /= pow10(scale() - keep);
  return m.get_d() * std::pow(10.0, -static_cast<double>(keep));
}

bool agree_to_places(const HPReal& a, const HPReal& b, long places) {
  Aligned x = align(a, b);
  const long s = x.digits + x.guard;
  if (places > s) return false;
  BigInt diff = abs(x.ma - x.mb) + x.ea + x.eb;
  return diff < pow10(s - places);
}

HPReal abs_diff(const HPReal& a, const HPReal& b) {
  Aligned x = align(a, b);
  return HPReal(abs(x.ma - x.mb), x.digits, x.ea + x.eb, x.guard);
}

long agreeing_places(const HPReal& a, const HPReal& b) {
  Aligned x = align(a, b);
  const long s = x.digits + x.guard;
  BigInt diff = abs(x.ma - x.mb) + x.ea + x.eb;
  if (diff == 0) return x.digits;
  const long len = static_cast<long>(decimal_length(diff));
  return std::min<long>(x.digits, std::max<long>(0, s - len));
}

bool HPReal::is_below(long places) const {
  if (places > scale()) return false;
  return abs(mant_) + err_ < pow10(scale() - places);
}

}  // namespace balkan
