#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "arrangeops/arrangement.hpp"

namespace arrangeops {

// Dense square complex matrix, row-major. Sizes stay small (d^n with d = 2,
// n <= 6 in practice).
class CMatrix {
public:
    using Scalar = std::complex<double>;

    explicit CMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
    static CMatrix identity(int n);

    int size() const { return n_; }
    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    double max_abs() const;
    bool finite() const;

private:
    int n_;
    std::vector<Scalar> a_;
};

// Numeric R-matrix family u |-> S(u), a d^2 x d^2 matrix per spectral
// parameter. The exact core never touches this; momenta convert to doubles
// once, at the evaluation boundary.
struct RMatrixTheory {
    std::string name;
    int dim = 2;
    double tolerance = 1e-9;
    std::function<CMatrix(double)> evaluator;
};

// Built-in theories: "identity", "flip", "yang:eta=<float>" (also plain
// "yang" with eta = 1), "broken" (S(u) = Id + u E11 (x) E22, a diagonal and
// therefore still factorizable family) and "skew" (S(u) = Id + u E12 (x) E21,
// which genuinely violates the Yang-Baxter identity).
RMatrixTheory builtin_theory(const std::string& name);

struct ScatteringAmplitude {
    CMatrix op;
    int particle_count;
};

// Embeds a d^2 x d^2 matrix at tensor slots (a, b) of n slots, a < b.
CMatrix embed_pair(const CMatrix& s, int a, int b, int n, int d);

// Max-entry norm of S12 S13 S23 - S23 S13 S12 at the given parameters
// (arguments u1-u2, u1-u3, u2-u3).
double check_yang_baxter(const RMatrixTheory& th, double u1, double u2, double u3);

// Chronological product over the crossing events of P, the evaluator taken
// at p_i - p_j and embedded at tensor slots (i, j). Simultaneous blocks of
// size >= 3 are linearized only when the theory passes its Yang-Baxter check
// on the block's parameters; otherwise the evaluation refuses.
ScatteringAmplitude evaluate(const RMatrixTheory& th, const Arrangement& P);

// Compares evaluate(P) against the Z-projected (concurrent) image linearized
// in both extremal orders; the max residual detects non-factorizable
// theories without any Yang-Baxter gate.
double check_factorization(const RMatrixTheory& th, const Arrangement& P, const Point2& A);

} // namespace arrangeops
