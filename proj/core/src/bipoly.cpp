#include "hypertel/bipoly.hpp"

#include <sstream>

namespace hypertel {

namespace {
const Int kZero(0);
}

BiPoly::BiPoly(KBasis basis, std::vector<std::vector<Int>> grid)
    : basis_(basis), c_(std::move(grid)) {
    size_t w = 0;
    for (const auto& row : c_) w = std::max(w, row.size());
    for (auto& row : c_) row.resize(w, Int(0));
    trim();
}

void BiPoly::trim() {
    auto row_zero = [](const std::vector<Int>& r) {
        for (const auto& c : r)
            if (c != 0) return false;
        return true;
    };
    while (!c_.empty() && row_zero(c_.back())) c_.pop_back();
    if (c_.empty()) return;
    size_t w = c_[0].size();
    while (w > 0) {
        bool zero = true;
        for (const auto& row : c_)
            if (row[w - 1] != 0) { zero = false; break; }
        if (!zero) break;
        --w;
    }
    if (w == 0) { c_.clear(); return; }
    for (auto& row : c_) row.resize(w);
}

BiPoly BiPoly::constant(const Int& c, KBasis basis) {
    BiPoly r(basis);
    if (c != 0) r.c_ = {{c}};
    return r;
}

BiPoly BiPoly::monomial(const Int& c, size_t i, size_t j, KBasis basis) {
    BiPoly r(basis);
    if (c == 0) return r;
    r.c_.assign(i + 1, std::vector<Int>(j + 1, Int(0)));
    r.c_[i][j] = c;
    return r;
}

BiPoly BiPoly::linear(const Int& a, const Int& b, const Int& c, KBasis basis) {
    BiPoly r(basis);
    r.c_ = {{c, b}, {a, Int(0)}};
    r.trim();
    return r;
}

BiPoly BiPoly::from_unipoly_n(const UniPoly& p, KBasis basis) {
    BiPoly r(basis);
    for (size_t i = 0; i < p.coeffs().size(); ++i) r.c_.push_back({p.coeffs()[i]});
    r.trim();
    return r;
}

BiPoly BiPoly::from_k_coeffs(const std::vector<UniPoly>& cols, KBasis basis) {
    BiPoly r(basis);
    size_t h = 0;
    for (const auto& p : cols) h = std::max(h, p.coeffs().size());
    if (h == 0) return r;
    r.c_.assign(h, std::vector<Int>(cols.size(), Int(0)));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols[j].coeffs().size(); ++i) r.c_[i][j] = cols[j].coeffs()[i];
    r.trim();
    return r;
}

long BiPoly::total_degree() const {
    long d = -1;
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j)
            if (c_[i][j] != 0) d = std::max(d, static_cast<long>(i + j));
    return d;
}

const Int& BiPoly::coeff(size_t i, size_t j) const {
    if (i >= c_.size() || j >= c_[i].size()) return kZero;
    return c_[i][j];
}

UniPoly BiPoly::k_coeff(size_t j) const {
    std::vector<Int> v;
    for (size_t i = 0; i < c_.size(); ++i) v.push_back(coeff(i, j));
    return UniPoly(std::move(v));
}

Int BiPoly::norm() const {
    Int h(0);
    for (const auto& row : c_)
        for (const auto& c : row) {
            Int a = abs_int(c);
            if (a > h) h = a;
        }
    return h;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& row : r.c_)
        for (auto& c : row) c = -c;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    if (basis_ != o.basis_)
        fail(ErrorCode::InternalInconsistency, "BiPoly basis mismatch in addition");
    BiPoly r(basis_);
    size_t rows = std::max(c_.size(), o.c_.size());
    size_t cols = std::max(c_.empty() ? 0 : c_[0].size(), o.c_.empty() ? 0 : o.c_[0].size());
    r.c_.assign(rows, std::vector<Int>(cols, Int(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            r.c_[i][j] = coeff(i, j) + o.coeff(i, j);
    r.trim();
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const Int& s) const {
    if (s == 0) return BiPoly(basis_);
    BiPoly r(*this);
    for (auto& row : r.c_)
        for (auto& c : row) c *= s;
    return r;
}

BiPoly BiPoly::mul_unipoly_n(const UniPoly& p) const {
    if (is_zero() || p.is_zero()) return BiPoly(basis_);
    BiPoly r(basis_);
    size_t rows = c_.size() + p.coeffs().size() - 1;
    size_t cols = c_[0].size();
    r.c_.assign(rows, std::vector<Int>(cols, Int(0)));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t t = 0; t < p.coeffs().size(); ++t) {
            if (p.coeffs()[t] == 0) continue;
            for (size_t j = 0; j < cols; ++j)
                if (c_[i][j] != 0) r.c_[i + t][j] += c_[i][j] * p.coeffs()[t];
        }
    r.trim();
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (basis_ != o.basis_)
        fail(ErrorCode::InternalInconsistency, "BiPoly basis mismatch in multiplication");
    if (is_zero() || o.is_zero()) return BiPoly(basis_);
    size_t rows = c_.size() + o.c_.size() - 1;
    size_t ka = c_[0].size() - 1, kb = o.c_[0].size() - 1;
    size_t cols = ka + kb + 1;
    std::vector<std::vector<Int>> out(rows, std::vector<Int>(cols, Int(0)));
    if (basis_ == KBasis::Standard) {
        for (size_t i1 = 0; i1 < c_.size(); ++i1)
            for (size_t j1 = 0; j1 <= ka; ++j1) {
                if (c_[i1][j1] == 0) continue;
                for (size_t i2 = 0; i2 < o.c_.size(); ++i2)
                    for (size_t j2 = 0; j2 <= kb; ++j2)
                        if (o.c_[i2][j2] != 0)
                            out[i1 + i2][j1 + j2] += c_[i1][j1] * o.c_[i2][j2];
            }
    } else {
        // C(k,j1)*C(k,j2) = sum_{t=max}^{j1+j2} C(t,j1)*C(j1, j1+j2-t)*C(k,t)
        for (size_t j1 = 0; j1 <= ka; ++j1)
            for (size_t j2 = 0; j2 <= kb; ++j2)
                for (size_t t = std::max(j1, j2); t <= j1 + j2; ++t) {
                    Int coef = binomial_int(Int(static_cast<long>(t)), j1) *
                               binomial_int(Int(static_cast<long>(j1)), j1 + j2 - t);
                    if (coef == 0) continue;
                    for (size_t i1 = 0; i1 < c_.size(); ++i1) {
                        if (c_[i1][j1] == 0) continue;
                        for (size_t i2 = 0; i2 < o.c_.size(); ++i2)
                            if (o.c_[i2][j2] != 0)
                                out[i1 + i2][t] += coef * c_[i1][j1] * o.c_[i2][j2];
                    }
                }
    }
    return BiPoly(basis_, std::move(out));
}

BiPoly BiPoly::mul_linear_binomial(const Int& a, const Int& b, const Int& c) const {
    if (basis_ != KBasis::Binomial)
        fail(ErrorCode::InternalInconsistency, "mul_linear_binomial requires binomial basis");
    if (is_zero()) return BiPoly(KBasis::Binomial);
    if (a == 0 && b == 0 && c == 0) return BiPoly(KBasis::Binomial);
    size_t kd = c_[0].size() - 1;
    size_t cols = kd + (b != 0 ? 2 : 1);
    size_t rows = c_.size() + (a != 0 ? 1 : 0);
    std::vector<std::vector<Int>> out(rows, std::vector<Int>(cols, Int(0)));
    for (size_t i = 0; i <= kd + (b != 0 ? 1 : 0); ++i) {
        // coefficient at C(k,i): (a*n + b*i + c) * q_i + b*i*q_{i-1}
        Int bi = b * Int(static_cast<long>(i));
        for (size_t t = 0; t < c_.size(); ++t) {
            if (i <= kd && c_[t][i] != 0) {
                out[t][i] += (bi + c) * c_[t][i];
                if (a != 0) out[t + 1][i] += a * c_[t][i];
            }
            if (i >= 1 && i - 1 <= kd && bi != 0 && c_[t][i - 1] != 0)
                out[t][i] += bi * c_[t][i - 1];
        }
    }
    return BiPoly(KBasis::Binomial, std::move(out));
}

BiPoly BiPoly::to_binomial() const {
    if (basis_ == KBasis::Binomial) return *this;
    if (is_zero()) return BiPoly(KBasis::Binomial);
    size_t kd = c_[0].size() - 1;
    std::vector<std::vector<Int>> out(c_.size(), std::vector<Int>(kd + 1, Int(0)));
    for (size_t m = 0; m <= kd; ++m) {
        auto s2 = stirling2_row(m);
        for (size_t t = 0; t < s2.size(); ++t) {
            if (s2[t] == 0) continue;
            Int w = s2[t] * factorial(t);
            for (size_t i = 0; i < c_.size(); ++i)
                if (c_[i][m] != 0) out[i][t] += c_[i][m] * w;
        }
    }
    return BiPoly(KBasis::Binomial, std::move(out));
}

BiPoly BiPoly::to_standard() const {
    if (basis_ == KBasis::Standard) return *this;
    if (is_zero()) return BiPoly(KBasis::Standard);
    size_t kd = c_[0].size() - 1;
    // C(k,j) = (1/j!) sum_t s(j,t) k^t; common denominator D = kd!
    Int D = factorial(kd);
    std::vector<std::vector<Int>> num(c_.size(), std::vector<Int>(kd + 1, Int(0)));
    for (size_t j = 0; j <= kd; ++j) {
        auto s1 = stirling1_signed_row(j);
        Int w = D / factorial(j);
        for (size_t t = 0; t < s1.size(); ++t) {
            if (s1[t] == 0) continue;
            Int ws = w * s1[t];
            for (size_t i = 0; i < c_.size(); ++i)
                if (c_[i][j] != 0) num[i][t] += c_[i][j] * ws;
        }
    }
    for (auto& row : num)
        for (auto& v : row) {
            if (!mpz_divisible_p(v.get_mpz_t(), D.get_mpz_t()))
                fail(ErrorCode::NonIntegralConversion,
                     "binomial-basis polynomial has non-integer standard coefficients");
            Int q;
            mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), D.get_mpz_t());
            v = q;
        }
    return BiPoly(KBasis::Standard, std::move(num));
}

BiPoly BiPoly::shift_n(const Int& r) const {
    if (is_zero() || r == 0) return *this;
    size_t rows = c_.size(), cols = c_[0].size();
    std::vector<std::vector<Int>> out(rows, std::vector<Int>(cols, Int(0)));
    // (n+r)^i = sum_t C(i,t) r^{i-t} n^t
    for (size_t i = 0; i < rows; ++i) {
        Int w(1);
        for (size_t t = i + 1; t-- > 0;) {
            // w = C(i,t) * r^{i-t}, built incrementally from t = i down
            if (t < i) {
                // C(i,t) = C(i,t+1)*(t+1)/(i-t); multiply r each step
                w = w * Int(static_cast<long>(t + 1)) * r / Int(static_cast<long>(i - t));
            }
            if (w == 0) break;
            for (size_t j = 0; j < cols; ++j)
                if (c_[i][j] != 0) out[t][j] += w * c_[i][j];
        }
    }
    return BiPoly(basis_, std::move(out));
}

BiPoly BiPoly::shift_k_binomial() const {
    if (basis_ != KBasis::Binomial)
        fail(ErrorCode::InternalInconsistency, "shift_k_binomial requires binomial basis");
    if (is_zero()) return *this;
    // C(k+1,j) = C(k,j) + C(k,j-1), so new_coeff[j] = old[j] + old[j+1]
    size_t rows = c_.size(), cols = c_[0].size();
    std::vector<std::vector<Int>> out(rows, std::vector<Int>(cols, Int(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            out[i][j] = c_[i][j] + (j + 1 < cols ? c_[i][j + 1] : kZero);
    return BiPoly(KBasis::Binomial, std::move(out));
}

Rat BiPoly::eval(const Int& n, const Int& k) const {
    if (is_zero()) return Rat(0);
    Rat acc(0);
    size_t cols = c_[0].size();
    for (size_t j = 0; j < cols; ++j) {
        UniPoly qj = k_coeff(j);
        if (qj.is_zero()) continue;
        Int kval = basis_ == KBasis::Standard ? pow_int(k, j) : binomial_int(k, j);
        acc += Rat(qj.eval(n) * kval);
    }
    return acc;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    size_t cols = c_[0].size();
    for (size_t j = 0; j < cols; ++j) {
        UniPoly qj = k_coeff(j);
        if (qj.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << qj.str() << ")";
        if (j > 0) {
            if (basis_ == KBasis::Binomial)
                os << "*C(k," << j << ")";
            else {
                os << "*k";
                if (j > 1) os << "^" << j;
            }
        }
    }
    return os.str();
}

BiPoly rising_factorial_binomial(const Int& a, const Int& b, const Int& c, long m) {
    if (m < 0)
        fail(ErrorCode::NegativeExponent,
             "rising factorial with negative exponent has no polynomial form");
    BiPoly r = BiPoly::constant(Int(1), KBasis::Binomial);
    for (long t = 0; t < m; ++t) r = r.mul_linear_binomial(a, b, c + Int(t));
    return r;
}

bool rising_factorial_value(const Int& t, long m, Rat& out) {
    if (m >= 0) {
        Int acc(1);
        for (long j = 0; j < m; ++j) acc *= t + Int(j);
        out = Rat(acc);
        return true;
    }
    Int acc(1);
    for (long j = 1; j <= -m; ++j) {
        Int f = t - Int(j);
        if (f == 0) return false;
        acc *= f;
    }
    out = Rat(Int(1), acc);
    out.canonicalize();
    return true;
}

} // namespace hypertel
