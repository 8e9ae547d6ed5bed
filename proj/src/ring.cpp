#include "relpib/ring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace relpib {

namespace {

bool squarefree(long d) {
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0)
            return false;
    }
    return true;
}

} // namespace

RingSpec::RingSpec(long D) : d_(D) {
    if (D <= 0)
        throw domain_error("D must be a positive integer");
    if (!squarefree(D))
        throw domain_error("D must be squarefree: " + std::to_string(D));
    // -D = 1 (mod 4)  <=>  D = 3 (mod 4)
    lat_ = (D % 4 == 3) ? Lattice::Full : Lattice::Half;
}

QuadInt::QuadInt(RingSpec ring, mpz_class x, mpz_class y)
    : ring_(ring), x_(std::move(x)), y_(std::move(y)) {
    check_invariant();
}

void QuadInt::check_invariant() const {
    bool ok;
    if (ring_.lattice() == Lattice::Full)
        ok = ((x_ - y_) % 2 == 0);
    else
        ok = (x_ % 2 == 0) && (y_ % 2 == 0);
    if (!ok)
        throw domain_error("half-coordinates violate the lattice parity invariant");
}

QuadInt QuadInt::from_parts(RingSpec ring, const mpz_class& a, const mpz_class& b) {
    return QuadInt(ring, 2 * a, 2 * b);
}

QuadInt QuadInt::from_basis(RingSpec ring, const mpz_class& a, const mpz_class& b) {
    if (ring.lattice() == Lattice::Full)
        return QuadInt(ring, 2 * a + b, b);
    return QuadInt(ring, 2 * a, 2 * b);
}

QuadInt QuadInt::integer(RingSpec ring, const mpz_class& n) { return QuadInt(ring, 2 * n, 0); }

bool QuadInt::is_unit() const { return norm() == 1; }

static void require_same_ring(const QuadInt& a, const QuadInt& b) {
    if (a.ring() != b.ring())
        throw ring_mismatch_error("operands live in different rings");
}

QuadInt operator+(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    return QuadInt(a.ring_, a.x_ + b.x_, a.y_ + b.y_);
}

QuadInt operator-(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    return QuadInt(a.ring_, a.x_ - b.x_, a.y_ - b.y_);
}

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    // ((x1 + y1 s)/2)((x2 + y2 s)/2) with s^2 = -D:
    // result half-coordinates ((x1x2 - D y1y2)/2, (x1y2 + x2y1)/2),
    // both provably integral for valid operands.
    mpz_class rx = a.x_ * b.x_ - mpz_class(a.ring_.D()) * a.y_ * b.y_;
    mpz_class ry = a.x_ * b.y_ + b.x_ * a.y_;
    if (rx % 2 != 0 || ry % 2 != 0)
        throw anomaly_error("product left the lattice; invariant was broken");
    return QuadInt(a.ring_, rx / 2, ry / 2);
}

QuadInt QuadInt::operator-() const { return QuadInt(ring_, -x_, -y_); }

QuadInt& QuadInt::operator+=(const QuadInt& o) { return *this = *this + o; }
QuadInt& QuadInt::operator-=(const QuadInt& o) { return *this = *this - o; }
QuadInt& QuadInt::operator*=(const QuadInt& o) { return *this = *this * o; }

QuadInt operator*(const QuadInt& a, const mpz_class& k) {
    return QuadInt(a.ring_, a.x_ * k, a.y_ * k);
}

QuadInt operator*(const QuadInt& a, long k) { return a * mpz_class(k); }

QuadInt operator+(const QuadInt& a, long k) { return a + QuadInt::integer(a.ring_, k); }

QuadInt operator-(const QuadInt& a, long k) { return a - QuadInt::integer(a.ring_, k); }

bool operator==(const QuadInt& a, const QuadInt& b) {
    return a.ring_ == b.ring_ && a.x_ == b.x_ && a.y_ == b.y_;
}

QuadInt QuadInt::conj() const { return QuadInt(ring_, x_, -y_); }

mpz_class QuadInt::norm() const {
    mpz_class n = x_ * x_ + mpz_class(ring_.D()) * y_ * y_;
    if (n % 4 != 0)
        throw anomaly_error("norm not integral; invariant was broken");
    return n / 4;
}

std::optional<QuadInt> QuadInt::div_exact(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    if (b.is_zero())
        return std::nullopt;
    mpz_class n = b.norm();
    QuadInt t = a * b.conj(); // a/b = t/n
    if (t.x_ % n != 0 || t.y_ % n != 0)
        return std::nullopt;
    mpz_class qx = t.x_ / n, qy = t.y_ / n;
    // Parity must still hold for the quotient.
    if (a.ring_.lattice() == Lattice::Full) {
        if ((qx - qy) % 2 != 0)
            return std::nullopt;
    } else {
        if (qx % 2 != 0 || qy % 2 != 0)
            return std::nullopt;
    }
    return QuadInt(a.ring_, qx, qy);
}

std::optional<QuadInt> QuadInt::sqrt_exact(const QuadInt& a) {
    if (a.is_zero())
        return QuadInt::zero(a.ring_);
    // If v^2 = a then norm(v)^2 = norm(a) and, in half-coordinates
    // v = (s + t*sqrt(-D))/2:  s^2 = 2*norm(v) + x_a,  D t^2 = 2*norm(v) - x_a,
    // s*t = y_a.
    mpz_class na = a.norm();
    mpz_class nv;
    if (!mpz_root(nv.get_mpz_t(), na.get_mpz_t(), 2))
        return std::nullopt;
    mpz_class s2 = 2 * nv + a.x_;
    mpz_class dt2 = 2 * nv - a.x_;
    if (s2 < 0 || dt2 < 0 || dt2 % a.ring_.D() != 0)
        return std::nullopt;
    mpz_class t2 = dt2 / a.ring_.D();
    mpz_class s, t;
    if (!mpz_root(s.get_mpz_t(), s2.get_mpz_t(), 2))
        return std::nullopt;
    if (!mpz_root(t.get_mpz_t(), t2.get_mpz_t(), 2))
        return std::nullopt;
    // fix relative sign via s*t = y
    if (s * t != a.y_)
        t = -t;
    if (s * t != a.y_)
        return std::nullopt;
    // parity check is done by the constructor
    try {
        QuadInt v(a.ring_, s, t);
        if (v * v == a)
            return v;
        v = QuadInt(a.ring_, s, -t);
        if (v * v == a)
            return v;
    } catch (const domain_error&) {
        return std::nullopt;
    }
    return std::nullopt;
}

int QuadInt::cmp(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    int c = ::cmp(a.norm(), b.norm());
    if (c != 0)
        return c;
    c = ::cmp(a.x_, b.x_);
    if (c != 0)
        return c;
    return ::cmp(a.y_, b.y_);
}

Complex QuadInt::embed(mpfr_prec_t prec) const {
    // value = x/2 + (y/2) sqrt(D) i
    Real re = Real::exact(x_, prec) / Real::exact(2L, prec);
    Real im = Real::exact(y_, prec) * Real::exact(static_cast<long>(ring_.D()), prec).sqrt() /
              Real::exact(2L, prec);
    return Complex(re, im);
}

std::string QuadInt::str() const {
    mpz_class a, b;
    if (ring_.lattice() == Lattice::Full) {
        b = y_;
        a = (x_ - y_) / 2;
    } else {
        a = x_ / 2;
        b = y_ / 2;
    }
    std::ostringstream os;
    os << a.get_str();
    if (b >= 0)
        os << "+" << b.get_str();
    else
        os << "-" << mpz_class(-b).get_str();
    os << "*w";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadInt& v) { return os << v.str(); }

namespace {

// integer with optional sign; advances pos past it
mpz_class parse_int(const std::string& s, size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos == start)
        throw parse_error("expected an integer in element syntax: \"" + s + "\"");
    mpz_class v(s.substr(start, pos - start));
    return neg ? mpz_class(-v) : v;
}

} // namespace

QuadInt QuadInt::parse(RingSpec ring, const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw parse_error("empty element");
    size_t pos = 0;
    mpz_class a = parse_int(s, pos);
    if (pos == s.size())
        return from_basis(ring, a, 0); // bare integer
    if (s[pos] == '*') {
        // form "b*w"
        ++pos;
        if (pos + 1 != s.size() || s[pos] != 'w')
            throw parse_error("malformed element: \"" + raw + "\"");
        return from_basis(ring, 0, a);
    }
    if (s[pos] != '+' && s[pos] != '-')
        throw parse_error("malformed element: \"" + raw + "\"");
    mpz_class b = parse_int(s, pos);
    if (pos + 2 != s.size() || s[pos] != '*' || s[pos + 1] != 'w')
        throw parse_error("malformed element: \"" + raw + "\"");
    return from_basis(ring, a, b);
}

bool congruent(const QuadInt& a, const QuadInt& b, const QuadInt& d) {
    if (a.ring() != b.ring() || a.ring() != d.ring())
        throw ring_mismatch_error("congruence operands live in different rings");
    if (d.is_zero())
        throw invalid_modulus_error("congruence modulo zero");
    return QuadInt::div_exact(a - b, d).has_value();
}

QuadInt unit_value(RingSpec ring, UnitRoot u) {
    switch (u) {
    case UnitRoot::One:
        return QuadInt::integer(ring, 1);
    case UnitRoot::MinusOne:
        return QuadInt::integer(ring, -1);
    case UnitRoot::I:
    case UnitRoot::MinusI:
        if (ring.D() != 1)
            throw domain_error("i exists only for D = 1");
        return QuadInt(ring, 0, u == UnitRoot::I ? 2 : -2);
    case UnitRoot::Omega:
    case UnitRoot::OmegaSq:
    case UnitRoot::MinusOmega:
    case UnitRoot::MinusOmegaSq:
        if (ring.D() != 3)
            throw domain_error("omega exists only for D = 3");
        switch (u) {
        case UnitRoot::Omega:
            return QuadInt(ring, -1, 1);
        case UnitRoot::OmegaSq:
            return QuadInt(ring, -1, -1);
        case UnitRoot::MinusOmega:
            return QuadInt(ring, 1, -1);
        default:
            return QuadInt(ring, 1, 1);
        }
    }
    throw domain_error("unknown unit tag");
}

std::vector<QuadInt> units(RingSpec ring) {
    std::vector<QuadInt> out;
    out.push_back(QuadInt::integer(ring, 1));
    out.push_back(QuadInt::integer(ring, -1));
    if (ring.D() == 1) {
        out.push_back(unit_value(ring, UnitRoot::I));
        out.push_back(unit_value(ring, UnitRoot::MinusI));
    } else if (ring.D() == 3) {
        out.push_back(unit_value(ring, UnitRoot::Omega));
        out.push_back(unit_value(ring, UnitRoot::OmegaSq));
        out.push_back(unit_value(ring, UnitRoot::MinusOmega));
        out.push_back(unit_value(ring, UnitRoot::MinusOmegaSq));
    }
    return out;
}

std::vector<QuadInt> enumerate_disk(RingSpec ring, const mpq_class& radius) {
    if (radius < 0)
        throw domain_error("disk radius must be nonnegative");
    std::vector<QuadInt> out;
    // |c| <= R  <=>  x^2 + D y^2 <= 4 R^2; exact with R = num/den:
    // (x^2 + D y^2) den^2 <= 4 num^2
    mpz_class num = radius.get_num(), den = radius.get_den();
    mpz_class den2 = den * den, bound = 4 * num * num;
    mpz_class D(ring.D());
    // y range: D y^2 den^2 <= bound
    mpz_class ylim2 = bound / (D * den2);
    mpz_class ylim;
    mpz_sqrt(ylim.get_mpz_t(), ylim2.get_mpz_t());
    for (mpz_class y = -ylim; y <= ylim; ++y) {
        mpz_class rest = bound - D * y * y * den2;
        if (rest < 0)
            continue;
        mpz_class xlim2 = rest / den2;
        mpz_class xlim;
        mpz_sqrt(xlim.get_mpz_t(), xlim2.get_mpz_t());
        for (mpz_class x = -xlim; x <= xlim; ++x) {
            if ((x * x + D * y * y) * den2 > bound)
                continue;
            if (ring.lattice() == Lattice::Full) {
                if ((x - y) % 2 != 0)
                    continue;
            } else {
                if (x % 2 != 0 || y % 2 != 0)
                    continue;
            }
            out.emplace_back(ring, x, y);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const QuadInt& a, const QuadInt& b) { return QuadInt::cmp(a, b) < 0; });
    return out;
}

namespace {

struct LatticePoint {
    long D;
    long x;
    long y;
};

// S_c = {+-1, +-i, +-1+-i, +-2+-i, +-1+-sqrt(-2), +-1+-sqrt(-3),
//        (+-1+-sqrt(-3))/2, (+-3+-sqrt(-3))/2}, mixed signs.
const LatticePoint kSc[] = {
    {0, 2, 0},            // +-1, every ring (D = 0 means "any")
    {1, 0, 2},            // +-i
    {1, 2, 2},  {1, 2, -2},  // +-1 +- i
    {1, 4, 2},  {1, 4, -2},  // +-2 +- i
    {2, 2, 2},  {2, 2, -2},  // +-1 +- sqrt(-2)
    {3, 2, 2},  {3, 2, -2},  // +-1 +- sqrt(-3)
    {3, 1, 1},  {3, 1, -1},  // (+-1 +- sqrt(-3))/2
    {3, 3, 1},  {3, 3, -1},  // (+-3 +- sqrt(-3))/2
};

// T = {1+-i, +-sqrt(-2), (1+-sqrt(-7))/2, 1+-sqrt(-2), +-sqrt(-3),
//      (3+-sqrt(-3))/2, (1+-sqrt(-11))/2}
const LatticePoint kT[] = {
    {1, 2, 2},  {1, 2, -2},
    {2, 0, 2},
    {7, 1, 1},  {7, 1, -1},
    {2, 2, 2},  {2, 2, -2},
    {3, 0, 2},
    {3, 3, 1},  {3, 3, -1},
    {11, 1, 1}, {11, 1, -1},
};

// T1 = T plus {+-2i, (3+-sqrt(-7))/2, (1+-sqrt(-15))/2, 1+-sqrt(-3)}
const LatticePoint kT1Extra[] = {
    {1, 0, 4},
    {7, 3, 1},  {7, 3, -1},
    {15, 1, 1}, {15, 1, -1},
    {3, 2, 2},  {3, 2, -2},
};

// Matches c against {p, -p} for table entries of the right ring; entries with
// y != 0 also match their mirror in y (mixed signs).
template <size_t N>
bool member(const QuadInt& c, const LatticePoint (&table)[N], bool mirror_y) {
    long D = c.ring().D();
    for (const auto& e : table) {
        if (e.D != 0 && e.D != D)
            continue;
        mpz_class ex(e.x), ey(e.y);
        if ((c.x() == ex && c.y() == ey) || (c.x() == -ex && c.y() == -ey))
            return true;
        if (mirror_y && e.y != 0) {
            if ((c.x() == ex && c.y() == -ey) || (c.x() == -ex && c.y() == ey))
                return true;
        }
    }
    return false;
}

} // namespace

bool in_Sc(const QuadInt& c) { return member(c, kSc, true); }

bool in_T(const QuadInt& c) { return member(c, kT, true); }

bool in_T1(const QuadInt& c) { return in_T(c) || member(c, kT1Extra, true); }

} // namespace relpib
