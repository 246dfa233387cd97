#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "hypertel/error.hpp"

namespace hypertel {

struct Deadline {
    std::chrono::steady_clock::time_point at;
    bool expired() const { return std::chrono::steady_clock::now() >= at; }
    static Deadline in_ms(long ms) {
        return {std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)};
    }
};

inline void check_deadline(const Deadline* dl, const char* where) {
    if (dl && dl->expired())
        fail(ErrorCode::Timeout, std::string("deadline exceeded in ") + where);
}

// One-step fraction-free Gauss-Jordan elimination (division by the previous
// pivot). Every intermediate entry is a minor of the input matrix, so kernel
// vectors read off the final tableau inherit Cramer-style degree and height
// bounds. Columns are processed left to right; the pivot row is chosen by
// Ops::pivot_key (smaller is better), ties by row order.
//
// Ops must provide (instance methods; may carry state such as a modulus):
//   using Elem = ...;
//   bool is_zero(const Elem&) const;
//   Elem one() const;
//   Elem mul(const Elem&, const Elem&) const;
//   Elem sub(const Elem&, const Elem&) const;
//   Elem div_exact(const Elem&, const Elem&) const;  // guaranteed exact
//   Elem neg(const Elem&) const;
//   auto pivot_key(const Elem&) const;               // totally ordered
template <class Ops>
class FractionFreeKernel {
public:
    using Elem = typename Ops::Elem;

    FractionFreeKernel(size_t rows, size_t cols, std::vector<Elem> entries, Ops ops = {})
        : ops_(std::move(ops)), rows_(rows), cols_(cols), m_(std::move(entries)) {
        if (m_.size() != rows_ * cols_)
            fail(ErrorCode::InternalInconsistency, "matrix shape mismatch");
        det_ = ops_.one();
    }

    void run(const Deadline* dl = nullptr) {
        std::vector<char> is_pivot_row(rows_, 0);
        settled_.assign(cols_, 0);
        Elem prev = ops_.one();
        for (size_t c = 0; c < cols_; ++c) {
            check_deadline(dl, "fraction-free elimination");
            std::optional<size_t> best;
            for (size_t r = 0; r < rows_; ++r) {
                if (is_pivot_row[r] || ops_.is_zero(at(r, c))) continue;
                if (!best || ops_.pivot_key(at(r, c)) < ops_.pivot_key(at(*best, c)))
                    best = r;
            }
            if (!best) {
                free_cols_.push_back(c);
                continue;
            }
            size_t pr = *best;
            is_pivot_row[pr] = 1;
            Elem d = at(pr, c);
            for (size_t r = 0; r < rows_; ++r) {
                if (r == pr) continue;
                Elem factor = at(r, c);
                bool factor_zero = ops_.is_zero(factor);
                for (size_t j = 0; j < cols_; ++j) {
                    if (j == c) continue;
                    if (settled_[j]) continue; // earlier pivot columns stay zero
                    Elem& e = at(r, j);
                    if (factor_zero) {
                        if (!ops_.is_zero(e)) e = ops_.div_exact(ops_.mul(d, e), prev);
                    } else {
                        Elem t = ops_.sub(ops_.mul(d, e), ops_.mul(factor, at(pr, j)));
                        e = ops_.is_zero(t) ? std::move(t) : ops_.div_exact(std::move(t), prev);
                    }
                }
                at(r, c) = Elem{}; // zero
            }
            pivot_rows_.push_back(pr);
            pivot_cols_.push_back(c);
            settled_[c] = 1;
            prev = std::move(d);
        }
        det_ = prev;
        done_ = true;
    }

    size_t rank() const { return pivot_cols_.size(); }
    const Elem& det() const { return det_; }

    // kernel basis, one vector per free column, in column order
    std::vector<std::vector<Elem>> kernel() const {
        if (!done_) fail(ErrorCode::InternalInconsistency, "kernel() before run()");
        std::vector<std::vector<Elem>> basis;
        for (size_t f : free_cols_) {
            std::vector<Elem> v(cols_);
            v[f] = det_;
            for (size_t t = 0; t < pivot_cols_.size(); ++t)
                v[pivot_cols_[t]] = ops_.neg(at(pivot_rows_[t], f));
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    Elem& at(size_t r, size_t c) { return m_[r * cols_ + c]; }
    const Elem& at(size_t r, size_t c) const { return m_[r * cols_ + c]; }

    Ops ops_;
    size_t rows_, cols_;
    std::vector<Elem> m_;
    std::vector<size_t> pivot_rows_, pivot_cols_, free_cols_;
    std::vector<char> settled_;
    Elem det_;
    bool done_ = false;
};

} // namespace hypertel
