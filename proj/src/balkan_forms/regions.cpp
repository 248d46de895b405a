#include <sstream>

#include "balkan/balkan_forms.hpp"
#include "balkan/constants.hpp"

namespace balkan {

std::string area_name(Area a) {
  switch (a) {
    case Area::Montenegro: return "Montenegro";
    case Area::Kosovo: return "Kosovo";
    case Area::Serbia: return "Serbia";
    case Area::BosniaHerzegovina: return "BosniaHerzegovina";
    case Area::Croatia: return "Croatia";
    case Area::OffGrid: return "OffGrid";
  }
  return "?";
}

Area classify(long j, long kappa) {
  if (j < 1 || j % 2 == 0) throw DomainError("classify needs odd j >= 1, got " + std::to_string(j));
  if (kappa < 0) throw DomainError("classify needs kappa >= 0, got " + std::to_string(kappa));
  if (j == 1) return Area::Montenegro;
  if (j <= kappa + 2) return Area::Kosovo;
  if (j <= 2 * kappa + 1) return Area::Serbia;
  if (j == 2 * kappa + 3) return Area::BosniaHerzegovina;
  if (j >= 2 * kappa + 5) return Area::Croatia;
  return Area::OffGrid;
}

long serbia_reflect(long j, long kappa) {
  if (classify(j, kappa) != Area::Serbia)
    throw DomainError("(" + std::to_string(j) + "," + std::to_string(kappa) + ") is not in Serbia");
  return 2 * (kappa + 1) - j;
}

QExact QExact::make(const BigRational& a0, const BigRational& a1, const BigRational& a2, ConstKind kind) {
  if (a1 == 0 && a2 == 0) throw DomainError("QExact with vanishing denominator");
  BigInt l = lcm(lcm(a0.get_den(), a1.get_den()), a2.get_den());
  QExact q;
  q.a0 = a0.get_num() * (l / a0.get_den());
  q.a1 = a1.get_num() * (l / a1.get_den());
  q.a2 = a2.get_num() * (l / a2.get_den());
  BigInt g = gcd(gcd(q.a0, q.a1), q.a2);
  q.a0 /= g;
  q.a1 /= g;
  q.a2 /= g;
  const int s = q.a2 != 0 ? sgn(q.a2) : sgn(q.a1);
  if (s < 0) {
    q.a0 = -q.a0;
    q.a1 = -q.a1;
    q.a2 = -q.a2;
  }
  q.kind = q.a2 == 0 ? ConstKind::Rational : kind;
  if (q.kind == ConstKind::Rational && kind != ConstKind::Rational) q.a2 = 0;
  return q;
}

QExact QExact::rational(const BigRational& v) {
  return make(v, BigRational(1), BigRational(0), ConstKind::Rational);
}

bool QExact::is_canonical() const {
  if (a1 == 0 && a2 == 0) return false;
  if (gcd(gcd(a0, a1), a2) != 1) return false;
  if ((kind == ConstKind::Rational) != (a2 == 0)) return false;
  if (a2 != 0) return a2 > 0;
  return a1 > 0;
}

BigRational QExact::rational_value() const {
  if (kind != ConstKind::Rational) throw DomainError("QExact value involves a constant");
  return make_rational(a0, a1);
}

HPReal QExact::value(long digits) const {
  const long work = digits + 10;
  HPReal num = HPReal::from_integer(a0, work);
  HPReal den = HPReal::from_integer(a1, work);
  if (kind != ConstKind::Rational) {
    HPReal k = constant_value(kind == ConstKind::G ? ConstantName::CatalanG : ConstantName::Log2, work);
    den = den + k * a2;
  }
  return (num / den).truncated(digits);
}

bool QExact::same_up_to_sign(const BigInt& b0, const BigInt& b1, const BigInt& b2) const {
  return (a0 == b0 && a1 == b1 && a2 == b2) || (a0 == -b0 && a1 == -b1 && a2 == -b2);
}

std::string QExact::to_string() const {
  std::ostringstream os;
  if (kind == ConstKind::Rational) {
    os << balkan::to_string(rational_value());
  } else {
    os << a0.get_str() << "/(" << a1.get_str() << (a2 < 0 ? " - " : " + ") << BigInt(abs(a2)).get_str() << "*"
       << kind_name(kind) << ")";
  }
  return os.str();
}

}  // namespace balkan
