#include "chabauty/realroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace chabauty {

namespace {

using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int sgn(const BigRational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

BigRational eval(const RatPoly& p, const BigRational& x) {
    BigRational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const BigRational q = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Strict bound on |root|: 1 + max |c_i / lc|.
BigRational cauchy_bound(const IntPolynomial& f) {
    BigRational m = 0;
    const BigRational lc = f.leading();
    for (int i = 0; i < f.degree(); ++i) {
        BigRational r = abs(BigRational(f.coeff(i)) / lc);
        if (r > m) m = r;
    }
    return m + 1;
}

// A non-root of f strictly inside (lo, hi), near the midpoint.
BigRational split_point(const SturmSequence& seq, const BigRational& lo, const BigRational& hi) {
    for (long k = 2;; ++k)
        for (long j = 1; j < k; ++j) {
            BigRational t = lo + (hi - lo) * j / k;
            if (seq.sign_at(t) != 0) return t;
        }
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    RatPoly p0(f.coeffs().begin(), f.coeffs().end());
    IntPolynomial df = f.derivative();
    RatPoly p1(df.coeffs().begin(), df.coeffs().end());
    seq_.push_back(p0);
    while (!p1.empty()) {
        seq_.push_back(p1);
        RatPoly r = remainder(seq_[seq_.size() - 2], p1);
        for (auto& c : r) c = -c;
        p1 = std::move(r);
    }
}

int SturmSequence::sign_changes(const BigRational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq_) {
        const int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count_roots(const BigRational& a, const BigRational& b) const {
    return sign_changes(a) - sign_changes(b);
}

int SturmSequence::sign_at(const BigRational& x) const { return sgn(eval(seq_.front(), x)); }

int sign_at(const IntPolynomial& f, const BigRational& x) { return sgn(f(x)); }

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& f) {
    if (f.degree() < 1) return {};
    const SturmSequence seq(f);
    const BigRational bound = cauchy_bound(f);
    std::vector<RootInterval> done;
    std::vector<RootInterval> todo{{-bound, bound}};
    while (!todo.empty()) {
        RootInterval iv = todo.back();
        todo.pop_back();
        const int n = seq.count_roots(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            done.push_back(iv);
            continue;
        }
        const BigRational mid = split_point(seq, iv.lo, iv.hi);
        todo.push_back({iv.lo, mid});
        todo.push_back({mid, iv.hi});
    }
    std::sort(done.begin(), done.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return done;
}

RootInterval refine_root(const SturmSequence& seq, RootInterval iv, const BigRational& width) {
    while (iv.hi - iv.lo > width) {
        const BigRational mid = split_point(seq, iv.lo, iv.hi);
        if (seq.count_roots(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

}  // namespace chabauty
