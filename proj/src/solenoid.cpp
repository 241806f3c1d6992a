#include "solrep/solenoid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace solrep {

namespace {

// exact rational value of a double (doubles are dyadic rationals)
BigRat exact_rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("exact_rat_from_double(): non-finite value");
    int e = 0;
    double m = std::frexp(x, &e);
    auto mi = static_cast<long long>(std::ldexp(m, 53));
    BigRat r(mi, 1);
    int shift = e - 53;
    if (shift >= 0)
        r *= BigRat(pow2(static_cast<unsigned>(shift)), 1);
    else
        r /= BigRat(pow2(static_cast<unsigned>(-shift)), 1);
    return r;
}

double arc_distance_double(double s, double t) {
    double f = std::fabs(s - t);
    f -= std::floor(f);
    return std::min(f, 1.0 - f);
}

BigRat arc_distance_rational(const BigRat& s, const BigRat& t) {
    BigRat f = s - t;
    // reduce mod 1 into [0,1)
    BigInt whole = boost::multiprecision::numerator(f) / boost::multiprecision::denominator(f);
    f -= BigRat(whole, 1);
    if (f < 0) f += 1;
    BigRat g = BigRat(1, 1) - f;
    return f < g ? f : g;
}

// multiplicative order of 2 modulo odd d
unsigned order_of_two(const BigInt& d, unsigned cap) {
    if (d == 1) return 1;
    BigInt r = 2 % d;
    unsigned p = 1;
    while (r != 1) {
        r = (r * 2) % d;
        ++p;
        if (p > cap) throw std::domain_error("order_of_two(): period exceeds cap");
    }
    return p;
}

}  // namespace

SolenoidPoint SolenoidPoint::exact(BigInt num, BigInt den) {
    if (den < 1 || (den & 1) == 0)
        throw std::invalid_argument("SolenoidPoint::exact(): denominator must be odd and positive");
    num %= den;
    if (num < 0) num += den;
    BigInt g = big_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    return SolenoidPoint(Exact{std::move(num), std::move(den)});
}

SolenoidPoint SolenoidPoint::truncated(std::vector<double> prefix, double consistency_tol) {
    if (prefix.empty())
        throw std::invalid_argument("SolenoidPoint::truncated(): prefix must be non-empty");
    for (double t : prefix)
        if (!(t >= 0.0 && t < 1.0))
            throw std::invalid_argument("SolenoidPoint::truncated(): angles must lie in [0,1)");
    for (size_t n = 0; n + 1 < prefix.size(); ++n) {
        double doubled = prefix[n + 1] * 2.0;
        doubled -= std::floor(doubled);
        if (arc_distance_double(prefix[n], doubled) > consistency_tol)
            throw std::invalid_argument("SolenoidPoint::truncated(): prefix violates doubling consistency");
    }
    return SolenoidPoint(Truncated{std::move(prefix)});
}

const SolenoidPoint::Exact& SolenoidPoint::exact_form() const {
    if (!is_exact()) throw std::logic_error("SolenoidPoint::exact_form(): point is truncated");
    return std::get<Exact>(form_);
}

const SolenoidPoint::Truncated& SolenoidPoint::truncated_form() const {
    if (is_exact()) throw std::logic_error("SolenoidPoint::truncated_form(): point is exact");
    return std::get<Truncated>(form_);
}

bool SolenoidPoint::has_coordinate(unsigned n) const {
    return is_exact() || n < std::get<Truncated>(form_).prefix.size();
}

unsigned SolenoidPoint::max_coordinate() const {
    if (is_exact())
        throw std::logic_error("SolenoidPoint::max_coordinate(): exact points are unbounded");
    return static_cast<unsigned>(std::get<Truncated>(form_).prefix.size()) - 1;
}

BigRat SolenoidPoint::angle_rational(unsigned n) const {
    if (is_exact()) {
        const auto& e = std::get<Exact>(form_);
        if (e.den == 1) return BigRat(0, 1);
        BigInt inv2 = (e.den + 1) >> 1;
        BigInt p = BigInt(boost::multiprecision::powm(inv2, BigInt(n), e.den));
        return BigRat((e.num * p) % e.den, e.den);
    }
    const auto& t = std::get<Truncated>(form_);
    if (n >= t.prefix.size())
        throw std::out_of_range("SolenoidPoint::angle_rational(): coordinate beyond truncated prefix");
    return exact_rat_from_double(t.prefix[n]);
}

double SolenoidPoint::angle(unsigned n) const {
    if (!is_exact()) {
        const auto& t = std::get<Truncated>(form_);
        if (n >= t.prefix.size())
            throw std::out_of_range("SolenoidPoint::angle(): coordinate beyond truncated prefix");
        return t.prefix[n];
    }
    return angle_rational(n).convert_to<double>();
}

double SolenoidPoint::tail_bound() const {
    if (is_exact()) return 0.0;
    return std::ldexp(1.0, -static_cast<int>(std::get<Truncated>(form_).prefix.size()) - 1);
}

std::string SolenoidPoint::str() const {
    if (is_exact()) {
        const auto& e = std::get<Exact>(form_);
        return e.num.str() + "/" + e.den.str();
    }
    const auto& t = std::get<Truncated>(form_);
    std::ostringstream os;
    os << "~[" << t.prefix.size() << " angles, head " << t.prefix.front() << "]";
    return os.str();
}

bool operator==(const SolenoidPoint& a, const SolenoidPoint& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) {
        const auto& ea = std::get<SolenoidPoint::Exact>(a.form_);
        const auto& eb = std::get<SolenoidPoint::Exact>(b.form_);
        return ea.num == eb.num && ea.den == eb.den;
    }
    return std::get<SolenoidPoint::Truncated>(a.form_).prefix ==
           std::get<SolenoidPoint::Truncated>(b.form_).prefix;
}

bool operator<(const SolenoidPoint& a, const SolenoidPoint& b) {
    if (a.is_exact() != b.is_exact()) return a.is_exact();
    if (a.is_exact()) {
        const auto& ea = std::get<SolenoidPoint::Exact>(a.form_);
        const auto& eb = std::get<SolenoidPoint::Exact>(b.form_);
        if (ea.den != eb.den) return ea.den < eb.den;
        return ea.num < eb.num;
    }
    return std::get<SolenoidPoint::Truncated>(a.form_).prefix <
           std::get<SolenoidPoint::Truncated>(b.form_).prefix;
}

SolenoidPoint shift_forward(const SolenoidPoint& p) {
    if (p.is_exact()) {
        const auto& e = p.exact_form();
        return SolenoidPoint::exact(e.num * 2, e.den);
    }
    const auto& prefix = p.truncated_form().prefix;
    std::vector<double> out;
    out.reserve(prefix.size() + 1);
    double head = prefix.front() * 2.0;
    head -= std::floor(head);
    out.push_back(head);
    out.insert(out.end(), prefix.begin(), prefix.end());
    return SolenoidPoint::truncated(std::move(out), 1e-6);
}

SolenoidPoint shift_backward(const SolenoidPoint& p) {
    if (p.is_exact()) {
        const auto& e = p.exact_form();
        BigInt inv2 = (e.den + 1) >> 1;
        return SolenoidPoint::exact(e.num * inv2, e.den);
    }
    const auto& prefix = p.truncated_form().prefix;
    if (prefix.size() <= 1)
        throw std::invalid_argument("shift_backward(): truncated prefix exhausted");
    return SolenoidPoint::truncated(std::vector<double>(prefix.begin() + 1, prefix.end()), 1e-6);
}

SolenoidPoint shift(const SolenoidPoint& p, long n) {
    SolenoidPoint q = p;
    for (; n > 0; --n) q = shift_forward(q);
    for (; n < 0; ++n) q = shift_backward(q);
    return q;
}

bool is_periodic(const SolenoidPoint& p, unsigned N) {
    if (!p.is_exact())
        throw std::invalid_argument("is_periodic(): undecidable for truncated points");
    if (N == 0) throw std::invalid_argument("is_periodic(): period must be positive");
    const BigInt& d = p.exact_form().den;
    if (d == 1) return true;
    return BigInt(boost::multiprecision::powm(BigInt(2), BigInt(N), d)) == 1;
}

unsigned minimal_period(const SolenoidPoint& p, unsigned cap) {
    if (!p.is_exact())
        throw std::invalid_argument("minimal_period(): undecidable for truncated points");
    return order_of_two(p.exact_form().den, cap);
}

RhoBounds rho_bounds(const SolenoidPoint& a, const SolenoidPoint& b, unsigned depth) {
    // equal exact points need no tail allowance: rho(a, a) = 0 exactly
    if (a.is_exact() && b.is_exact() && a == b) return RhoBounds{BigRat(0), BigRat(0)};

    unsigned T = depth;
    if (!a.is_exact()) T = std::min(T, a.max_coordinate());
    if (!b.is_exact()) T = std::min(T, b.max_coordinate());

    if (a.is_exact() && b.is_exact()) {
        // integer loop over the common denominator D
        const auto& ea = a.exact_form();
        const auto& eb = b.exact_form();
        BigInt D = ea.den * eb.den;
        BigInt sa = eb.den, sb = ea.den;  // scale factors to D
        BigInt ra = ea.num, rb = eb.num;
        BigInt inva = (ea.den + 1) >> 1, invb = (eb.den + 1) >> 1;
        BigInt acc = 0;
        for (unsigned n = 0; n <= T; ++n) {
            BigInt c = (ra * sa - rb * sb) % D;
            if (c < 0) c += D;
            BigInt arc = std::min(c, BigInt(D - c));
            acc = acc * 2 + arc;
            ra = (ra * inva) % ea.den;
            rb = (rb * invb) % eb.den;
        }
        BigRat lower(acc, D * pow2(T));
        BigRat upper(acc * 2 + D, D * pow2(T + 1));
        return {std::move(lower), std::move(upper)};
    }

    BigRat sum(0, 1);
    for (unsigned n = 0; n <= T; ++n)
        sum += arc_distance_rational(a.angle_rational(n), b.angle_rational(n)) / BigRat(pow2(n), 1);
    BigRat tail(1, pow2(T + 1));
    return {sum, sum + tail};
}

BigRat rho_exact(const SolenoidPoint& a, const SolenoidPoint& b, unsigned period_cap) {
    if (!a.is_exact() || !b.is_exact())
        throw std::invalid_argument("rho_exact(): requires exact points");
    const auto& ea = a.exact_form();
    const auto& eb = b.exact_form();
    BigInt d = big_lcm(ea.den, eb.den);
    unsigned p = order_of_two(d, period_cap);

    // one full period of the coordinate distances:
    // rho = 2 * sum_{n<p} arc_n * 2^{p-1-n} / (d * (2^p - 1))
    BigInt sa = d / ea.den, sb = d / eb.den;
    BigInt ra = ea.num, rb = eb.num;
    BigInt inva = (ea.den + 1) >> 1, invb = (eb.den + 1) >> 1;
    BigInt acc = 0;
    for (unsigned n = 0; n < p; ++n) {
        BigInt c = (ra * sa - rb * sb) % d;
        if (c < 0) c += d;
        acc = acc * 2 + std::min(c, BigInt(d - c));
        ra = (ra * inva) % ea.den;
        rb = (rb * invb) % eb.den;
    }
    return BigRat(acc * 2, d * (pow2(p) - 1));
}

double rho(const SolenoidPoint& a, const SolenoidPoint& b) {
    return rho_bounds(a, b).upper_double();
}

SolenoidPoint nearest_periodic(const SolenoidPoint& p, unsigned N) {
    if (N == 0) throw std::invalid_argument("nearest_periodic(): N must be positive");
    if (!p.is_exact() && !p.has_coordinate(N))
        throw std::invalid_argument("nearest_periodic(): insufficient precision in truncated prefix");

    BigInt m = pow2(2 * N + 1) - 1;
    BigRat theta = p.angle_rational(N);
    BigInt num = boost::multiprecision::numerator(theta) * m;
    BigInt den = boost::multiprecision::denominator(theta);
    // round num/den to the nearest integer, ties toward zero (num >= 0)
    BigInt j = (num * 2 + den - 1) / (den * 2);
    j %= m;
    // the unique point of denominator m whose N-th angle is j/m
    return SolenoidPoint::exact((j * pow2(3 * N + 1)) % m, m);
}

}  // namespace solrep
