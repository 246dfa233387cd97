#include "hypertel/unipoly.hpp"

#include <sstream>

namespace hypertel {

namespace {
const Int kZero(0);
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::variable() { return UniPoly(std::vector<Int>{Int(0), Int(1)}); }

UniPoly UniPoly::linear(const Int& a, const Int& b) {
    return UniPoly(std::vector<Int>{b, a});
}

UniPoly UniPoly::monomial(const Int& c, size_t i) {
    std::vector<Int> v(i + 1, Int(0));
    v[i] = c;
    return UniPoly(std::move(v));
}

const Int& UniPoly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Int& UniPoly::leading() const {
    if (c_.empty()) fail(ErrorCode::InternalInconsistency, "leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Int& s) const {
    if (s == 0) return UniPoly();
    UniPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

Int UniPoly::height() const {
    Int h(0);
    for (const auto& c : c_) {
        Int a = abs_int(c);
        if (a > h) h = a;
    }
    return h;
}

std::vector<Int> UniPoly::binomial_coeffs() const {
    // n^m = sum_i S(m,i) * i! * C(n,i)
    if (is_zero()) return {};
    std::vector<Int> out(c_.size(), Int(0));
    for (size_t m = 0; m < c_.size(); ++m) {
        if (c_[m] == 0) continue;
        auto s2 = stirling2_row(m);
        for (size_t i = 0; i < s2.size(); ++i)
            if (s2[i] != 0) out[i] += c_[m] * s2[i] * factorial(i);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Int UniPoly::height_binomial() const {
    Int h(0);
    for (const auto& c : binomial_coeffs()) {
        Int a = abs_int(c);
        if (a > h) h = a;
    }
    return h;
}

Int UniPoly::content() const {
    Int g(0);
    for (const auto& c : c_) {
        g = gcd_int(g, c);
        if (g == 1) break;
    }
    return g;
}

Int UniPoly::eval(const Int& n) const {
    Int acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * n + c_[i];
    return acc;
}

UniPoly UniPoly::shifted(const Int& r) const {
    // Horner in (n + r)
    UniPoly acc;
    UniPoly shift = UniPoly::linear(Int(1), r);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * shift + UniPoly(c_[i]);
    return acc;
}

UniPoly UniPoly::divide_exact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) fail(ErrorCode::InternalInconsistency, "exact division by zero polynomial");
    if (a.is_zero()) return UniPoly();
    if (a.degree() < b.degree())
        fail(ErrorCode::InternalInconsistency, "exact division: degree mismatch");
    std::vector<Int> rem = a.c_;
    std::vector<Int> q(a.c_.size() - b.c_.size() + 1, Int(0));
    const Int& lb = b.c_.back();
    for (size_t i = q.size(); i-- > 0;) {
        Int& top = rem[i + b.c_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            fail(ErrorCode::InternalInconsistency, "exact division failed (leading)");
        Int qi;
        mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[i] = qi;
        for (size_t j = 0; j < b.c_.size(); ++j) rem[i + j] -= qi * b.c_[j];
    }
    for (const auto& c : rem)
        if (c != 0) fail(ErrorCode::InternalInconsistency, "exact division failed (remainder)");
    return UniPoly(std::move(q));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Int& c = c_[i];
        if (c == 0) continue;
        Int a = abs_int(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

UniPoly primitive_positive(const UniPoly& p) {
    if (p.is_zero()) return p;
    Int c = p.content();
    UniPoly r = UniPoly::divide_exact(p, UniPoly(c));
    if (r.leading() < 0) r = -r;
    return r;
}

// content-reduced pseudo-remainder of a by b; only gcd-up-to-units matters
UniPoly prem_reduced(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    const Int& lb = b.leading();
    long db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        long shift = r.degree() - db;
        Int lr = r.leading();
        UniPoly t = UniPoly::monomial(lr, shift) * b;
        r = r * lb - t;
        Int c = r.content();
        if (c > 1) r = UniPoly::divide_exact(r, UniPoly(c));
    }
    return r;
}

} // namespace

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return UniPoly();
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    Int cont = gcd_int(a.content(), b.content());
    UniPoly u = primitive_positive(a);
    UniPoly v = primitive_positive(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    // primitive PRS
    while (!v.is_zero()) {
        UniPoly r = primitive_positive(prem_reduced(u, v));
        u = v;
        v = r;
    }
    return u * cont;
}

} // namespace hypertel
