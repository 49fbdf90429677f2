#include "arrangeops/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "arrangeops/error.hpp"

namespace arrangeops {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int k = 0; k < n; ++k) m.at(k, k) = 1.0;
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    CMatrix out(n_);
    for (int r = 0; r < n_; ++r)
        for (int k = 0; k < n_; ++k) {
            Scalar v = at(r, k);
            if (v == Scalar(0)) continue;
            for (int c = 0; c < n_; ++c) out.at(r, c) += v * o.at(k, c);
        }
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    CMatrix out(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
    return out;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const Scalar& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool CMatrix::finite() const {
    for (const Scalar& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

RMatrixTheory builtin_theory(const std::string& name) {
    auto make = [&](int d, std::function<CMatrix(double)> f) {
        RMatrixTheory th;
        th.name = name;
        th.dim = d;
        th.evaluator = std::move(f);
        return th;
    };
    if (name == "identity")
        return make(2, [](double) { return CMatrix::identity(4); });
    if (name == "flip")
        return make(2, [](double) {
            CMatrix f(4);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) f.at(i * 2 + j, j * 2 + i) = 1.0;
            return f;
        });
    if (name == "broken")
        return make(2, [](double u) {
            CMatrix s = CMatrix::identity(4);
            s.at(1, 1) += u;  // E11 (x) E22 slot
            return s;
        });
    if (name == "skew")
        return make(2, [](double u) {
            CMatrix s = CMatrix::identity(4);
            s.at(1, 2) += u;  // E12 (x) E21 slot; violates the Yang-Baxter identity
            return s;
        });
    if (name == "yang" || name.rfind("yang:eta=", 0) == 0) {
        double eta = 1.0;
        if (name != "yang") {
            try {
                eta = std::stod(name.substr(9));
            } catch (...) {
                fail(ErrorCode::Argument, "bad eta in theory name \"" + name + "\"");
            }
        }
        require(eta != 0.0, ErrorCode::Argument, "yang theory needs eta != 0");
        return make(2, [eta](double u) {
            CMatrix s(4);
            double denom = u + eta;
            require(denom != 0.0, ErrorCode::Domain,
                    "yang evaluator pole at u = -eta");
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    s.at(i * 2 + j, i * 2 + j) += u / denom;
                    s.at(i * 2 + j, j * 2 + i) += eta / denom;
                }
            return s;
        });
    }
    fail(ErrorCode::Argument, "unknown theory \"" + name + "\"");
}

CMatrix embed_pair(const CMatrix& s, int a, int b, int n, int d) {
    require(1 <= a && a < b && b <= n, ErrorCode::IndexOutOfRange,
            "embedding slots outside 1..n");
    int total = 1;
    for (int k = 0; k < n; ++k) total *= d;
    int rest = total / (d * d);  // joint range of the untouched slots
    // Strides of slots a and b with slot 1 most significant.
    int stride_a = 1, stride_b = 1;
    for (int k = a + 1; k <= n; ++k) stride_a *= d;
    for (int k = b + 1; k <= n; ++k) stride_b *= d;

    // Enumerate the untouched slots by building base offsets.
    std::vector<int> bases;
    bases.reserve(rest);
    for (int ctx = 0; ctx < rest; ++ctx) {
        int v = ctx, base = 0, weight = 1;
        for (int k = n; k >= 1; --k) {
            if (k == a || k == b) {
                weight *= d;
                continue;
            }
            base += (v % d) * weight;
            v /= d;
            weight *= d;
        }
        bases.push_back(base);
    }
    CMatrix out(total);
    for (int base : bases)
        for (int ra = 0; ra < d; ++ra)
            for (int rb = 0; rb < d; ++rb)
                for (int ca = 0; ca < d; ++ca)
                    for (int cb = 0; cb < d; ++cb) {
                        auto v = s.at(ra * d + rb, ca * d + cb);
                        if (v == CMatrix::Scalar(0)) continue;
                        out.at(base + ra * stride_a + rb * stride_b,
                               base + ca * stride_a + cb * stride_b) = v;
                    }
    return out;
}

namespace {

struct CrossingFactor {
    int i, j;   // particle indices, i < j
    double u;   // spectral parameter p_i - p_j
};

enum class Linearize { Low, High };

// Reduced word of the block reversal, as particle pairs in chronological
// order. Low bubbles left to right, High is the mirror scheme.
void linearize_block(const std::vector<int>& block, const Arrangement& P,
                     Linearize mode, std::vector<CrossingFactor>& out) {
    std::vector<int> local = block;  // ascending = pre-collision order
    int m = static_cast<int>(local.size());
    for (int pass = 0; pass < m - 1; ++pass) {
        for (int step = 0; step < m - 1 - pass; ++step) {
            int k = (mode == Linearize::Low) ? step : (m - 2 - step);
            int lo = local[k], hi = local[k + 1];
            int i = std::min(lo, hi), j = std::max(lo, hi);
            out.push_back({i, j,
                           P.line(i).p.to_double() - P.line(j).p.to_double()});
            std::swap(local[k], local[k + 1]);
        }
    }
}

std::vector<CrossingFactor> crossing_factors(const RMatrixTheory& th, const Arrangement& P,
                                             Linearize mode, bool gate_blocks) {
    OrderedPartitionChain chain = permutahedron_chain(P);
    std::vector<CrossingFactor> factors;
    for (const auto& ev : chain.events) {
        for (const auto& block : ev.blocks) {
            if (block.size() < 2) continue;
            if (block.size() == 2) {
                int i = block[0], j = block[1];
                factors.push_back({i, j,
                                   P.line(i).p.to_double() - P.line(j).p.to_double()});
                continue;
            }
            if (gate_blocks) {
                // Linearization is only legitimate for Yang-Baxter theories;
                // probe every parameter triple of the block.
                for (std::size_t x = 0; x < block.size(); ++x)
                    for (std::size_t y = x + 1; y < block.size(); ++y)
                        for (std::size_t z = y + 1; z < block.size(); ++z) {
                            double r = check_yang_baxter(
                                th, P.line(block[x]).p.to_double(),
                                P.line(block[y]).p.to_double(),
                                P.line(block[z]).p.to_double());
                            require(r <= th.tolerance, ErrorCode::NonFactorizable,
                                    "NonFactorizable: block of size " +
                                        std::to_string(block.size()) +
                                        " with Yang-Baxter residual " + std::to_string(r));
                        }
            }
            linearize_block(block, P, mode, factors);
        }
    }
    return factors;
}

ScatteringAmplitude evaluate_with(const RMatrixTheory& th, const Arrangement& P,
                                  Linearize mode, bool gate_blocks) {
    const int n = P.rank();
    const int d = th.dim;
    int total = 1;
    for (int k = 0; k < n; ++k) total *= d;
    CMatrix acc = CMatrix::identity(total);
    for (const CrossingFactor& f : crossing_factors(th, P, mode, gate_blocks)) {
        CMatrix s = th.evaluator(f.u);
        require(s.finite(), ErrorCode::Domain, "evaluator produced non-finite entries");
        acc = embed_pair(s, f.i, f.j, n, d) * acc;
    }
    return ScatteringAmplitude{std::move(acc), n};
}

} // namespace

double check_yang_baxter(const RMatrixTheory& th, double u1, double u2, double u3) {
    require(u1 != u2 && u1 != u3 && u2 != u3, ErrorCode::Domain,
            "DegenerateParameters: spectral parameters must be pairwise distinct");
    const int d = th.dim;
    CMatrix s12 = embed_pair(th.evaluator(u1 - u2), 1, 2, 3, d);
    CMatrix s13 = embed_pair(th.evaluator(u1 - u3), 1, 3, 3, d);
    CMatrix s23 = embed_pair(th.evaluator(u2 - u3), 2, 3, 3, d);
    CMatrix lhs = s12 * (s13 * s23);
    CMatrix rhs = s23 * (s13 * s12);
    return (lhs - rhs).max_abs();
}

ScatteringAmplitude evaluate(const RMatrixTheory& th, const Arrangement& P) {
    return evaluate_with(th, P, Linearize::Low, /*gate_blocks=*/true);
}

double check_factorization(const RMatrixTheory& th, const Arrangement& P, const Point2& A) {
    require(A.t > Rat(0), ErrorCode::Domain,
            "projection point must lie strictly above the root line");
    ScatteringAmplitude direct = evaluate_with(th, P, Linearize::Low, false);
    Arrangement projected = z_project(P, A);
    ScatteringAmplitude low = evaluate_with(th, projected, Linearize::Low, false);
    ScatteringAmplitude high = evaluate_with(th, projected, Linearize::High, false);
    double r1 = (direct.op - low.op).max_abs();
    double r2 = (direct.op - high.op).max_abs();
    return std::max(r1, r2);
}

} // namespace arrangeops
