#include "fom/moebius.hpp"

#include <algorithm>

#include "fom/error.hpp"

namespace fom {

const CycElt& SpherePoint::value() const {
  if (!value_) throw PreconditionError("value() of the point at infinity");
  return *value_;
}

SpherePoint SpherePoint::lift(int m) const {
  if (!value_) return *this;
  return SpherePoint(value_->lift(m));
}

std::string SpherePoint::to_string() const { return value_ ? value_->to_string() : "inf"; }

bool operator==(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity() || b.is_infinity()) {
    if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
    return a.is_infinity() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return *a.value_ <=> *b.value_;
}

SpherePoint conjugate(const SpherePoint& p) {
  if (p.is_infinity()) return p;
  return SpherePoint(conjugate(p.value()));
}

// ---------------------------------------------------------------------------

Moebius::Moebius(CycElt a, CycElt b, CycElt c, CycElt d, bool anti) : anti_(anti) {
  if ((a * d - b * c).is_zero()) throw PreconditionError("degenerate Moebius map (ad - bc = 0)");
  int m = a.conductor();
  for (const CycElt* e : {&b, &c, &d}) m = static_cast<int>(lcm_int(m, e->conductor()));
  std::array<CycElt, 4> v{a.lift(m), b.lift(m), c.lift(m), d.lift(m)};
  for (const auto& e : v) {
    if (e.is_zero()) continue;
    CycElt inv = e.inverse();
    for (auto& x : v) x = x * inv;
    break;
  }
  a_ = std::move(v[0]);
  b_ = std::move(v[1]);
  c_ = std::move(v[2]);
  d_ = std::move(v[3]);
}

SpherePoint Moebius::operator()(const SpherePoint& z_in) const {
  SpherePoint z = anti_ ? conjugate(z_in) : z_in;
  if (z.is_infinity()) {
    if (c_.is_zero()) return SpherePoint::infinity();
    return SpherePoint(a_ / c_);
  }
  CycElt den = c_ * z.value() + d_;
  if (den.is_zero()) return SpherePoint::infinity();
  return SpherePoint((a_ * z.value() + b_) / den);
}

Moebius Moebius::operator*(const Moebius& o) const {
  // Anti maps are N(conj z): conj passes through the inner matrix.
  CycElt a2 = anti_ ? conjugate(o.a_) : o.a_;
  CycElt b2 = anti_ ? conjugate(o.b_) : o.b_;
  CycElt c2 = anti_ ? conjugate(o.c_) : o.c_;
  CycElt d2 = anti_ ? conjugate(o.d_) : o.d_;
  return Moebius(a_ * a2 + b_ * c2, a_ * b2 + b_ * d2, c_ * a2 + d_ * c2, c_ * b2 + d_ * d2,
                 anti_ != o.anti_);
}

Moebius Moebius::inverse() const {
  if (!anti_) return Moebius(d_, -b_, -c_, a_);
  return Moebius(conjugate(d_), -conjugate(b_), -conjugate(c_), conjugate(a_), true);
}

Moebius Moebius::lift(int m) const { return Moebius(a_.lift(m), b_.lift(m), c_.lift(m), d_.lift(m), anti_); }

std::string Moebius::to_string() const {
  const std::string z = anti_ ? "conj(z)" : "z";
  auto lin = [&](const CycElt& p, const CycElt& q) {
    if (p.is_zero()) return "(" + q.to_string() + ")";
    std::string s = "(" + p.to_string() + ")*" + z;
    if (!q.is_zero()) s += " + (" + q.to_string() + ")";
    return s;
  };
  return "z -> [" + lin(a_, b_) + "] / [" + lin(c_, d_) + "]";
}

bool operator==(const Moebius& x, const Moebius& y) {
  return x.anti_ == y.anti_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::strong_ordering operator<=>(const Moebius& x, const Moebius& y) {
  if (x.anti_ != y.anti_) return x.anti_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = x.a_ <=> y.a_; c != 0) return c;
  if (auto c = x.b_ <=> y.b_; c != 0) return c;
  if (auto c = x.c_ <=> y.c_; c != 0) return c;
  return x.d_ <=> y.d_;
}

// ---------------------------------------------------------------------------

namespace {

void require_distinct(const std::vector<const SpherePoint*>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (*pts[i] == *pts[j]) throw PreconditionError("repeated points");
}

// Matrix of the map sending (z1, z2, z3) to (inf, 0, 1).
std::array<CycElt, 4> to_standard(const SpherePoint& z1, const SpherePoint& z2,
                                  const SpherePoint& z3) {
  if (z1.is_infinity()) return {CycElt(1), -z2.value(), CycElt(0), z3.value() - z2.value()};
  if (z2.is_infinity()) return {CycElt(0), z3.value() - z1.value(), CycElt(1), -z1.value()};
  if (z3.is_infinity()) return {CycElt(1), -z2.value(), CycElt(1), -z1.value()};
  CycElt u = z3.value() - z1.value();
  CycElt v = z3.value() - z2.value();
  return {u, -z2.value() * u, v, -z1.value() * v};
}

}  // namespace

CycElt cross_ratio(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c,
                   const SpherePoint& d) {
  require_distinct({&a, &b, &c, &d});
  auto diff = [](const SpherePoint& x, const SpherePoint& y) { return x.value() - y.value(); };
  // ((c-a)/(c-b)) * ((d-b)/(d-a)), dropping the factors that contain infinity
  if (a.is_infinity()) return diff(d, b) / diff(c, b);
  if (b.is_infinity()) return diff(c, a) / diff(d, a);
  if (c.is_infinity()) return diff(d, b) / diff(d, a);
  if (d.is_infinity()) return diff(c, a) / diff(c, b);
  return (diff(c, a) / diff(c, b)) * (diff(d, b) / diff(d, a));
}

std::vector<CycElt> g_orbit(const CycElt& c) {
  CycElt one(1);
  if (c.is_zero() || c == one) throw PreconditionError("g_orbit of 0 or 1");
  std::vector<CycElt> v{c,           one / c,           one - c,
                        one / (one - c), (c - one) / c, c / (c - one)};
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool concircular(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c,
                 const SpherePoint& d) {
  return is_real(cross_ratio(a, b, c, d));
}

Moebius moebius_from_triple(const std::array<SpherePoint, 3>& src,
                            const std::array<SpherePoint, 3>& dst) {
  require_distinct({&src[0], &src[1], &src[2]});
  require_distinct({&dst[0], &dst[1], &dst[2]});
  auto s = to_standard(src[0], src[1], src[2]);
  auto t = to_standard(dst[0], dst[1], dst[2]);
  Moebius ms(s[0], s[1], s[2], s[3]);
  Moebius mt(t[0], t[1], t[2], t[3]);
  return mt.inverse() * ms;
}

PointSet canonical_set(PointSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Moebius> set_maps(const PointSet& s_in, const PointSet& sp_in, bool anti) {
  PointSet s = canonical_set(s_in);
  PointSet sp = canonical_set(sp_in);
  if (s.size() != sp.size() || s.size() < 3) return {};
  PointSet src = s;
  if (anti)
    for (auto& p : src) p = conjugate(p);
  const std::array<SpherePoint, 3> base{src[0], src[1], src[2]};
  std::vector<Moebius> out;
  const std::size_t m = sp.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        if (i == j || j == k || i == k) continue;
        Moebius t = moebius_from_triple(base, {sp[i], sp[j], sp[k]});
        PointSet img;
        img.reserve(src.size());
        for (const auto& p : src) img.push_back(t(p));
        if (canonical_set(img) != sp) continue;
        out.push_back(anti ? Moebius(t.a(), t.b(), t.c(), t.d(), true) : t);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fom
