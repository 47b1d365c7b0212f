#include "nyq/smith_mcmillan.hpp"

#include "nyq/error.hpp"

namespace nyq {

namespace {

// Tracks A = U W V while W is reduced; U_inv and V_inv follow the inverse operations.
struct Reducer {
    PolyMatrix W, U, U_inv, V, V_inv;

    explicit Reducer(const PolyMatrix& A)
        : W(A),
          U(PolyMatrix::identity(A.rows())),
          U_inv(PolyMatrix::identity(A.rows())),
          V(PolyMatrix::identity(A.cols())),
          V_inv(PolyMatrix::identity(A.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < W.cols(); ++c) std::swap(W(i, c), W(j, c));
        for (std::size_t c = 0; c < U_inv.cols(); ++c) std::swap(U_inv(i, c), U_inv(j, c));
        for (std::size_t r = 0; r < U.rows(); ++r) std::swap(U(r, i), U(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < W.rows(); ++r) std::swap(W(r, i), W(r, j));
        for (std::size_t r = 0; r < V_inv.rows(); ++r) std::swap(V_inv(r, i), V_inv(r, j));
        for (std::size_t c = 0; c < V.cols(); ++c) std::swap(V(i, c), V(j, c));
    }
    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const Poly& q) {
        if (q.is_zero()) return;
        for (std::size_t c = 0; c < W.cols(); ++c) W(i, c) += q * W(j, c);
        for (std::size_t c = 0; c < U_inv.cols(); ++c) U_inv(i, c) += q * U_inv(j, c);
        for (std::size_t r = 0; r < U.rows(); ++r) U(r, j) -= q * U(r, i);
    }
    // col_j += q * col_i
    void add_col(std::size_t j, std::size_t i, const Poly& q) {
        if (q.is_zero()) return;
        for (std::size_t r = 0; r < W.rows(); ++r) W(r, j) += q * W(r, i);
        for (std::size_t r = 0; r < V_inv.rows(); ++r) V_inv(r, j) += q * V_inv(r, i);
        for (std::size_t c = 0; c < V.cols(); ++c) V(i, c) -= q * V(j, c);
    }
    void scale_row(std::size_t i, const GaussQ& c) {
        Poly s(c), s_inv(c.inverse());
        for (std::size_t k = 0; k < W.cols(); ++k) W(i, k) *= s;
        for (std::size_t k = 0; k < U_inv.cols(); ++k) U_inv(i, k) *= s;
        for (std::size_t r = 0; r < U.rows(); ++r) U(r, i) *= s_inv;
    }
};

}  // namespace

SmithForm smith_form(const PolyMatrix& A) {
    Reducer red(A);
    PolyMatrix& W = red.W;
    const std::size_t rows = W.rows(), cols = W.cols(), n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // minimal-degree pivot in the trailing block
            int best = -1;
            std::size_t pr = t, pc = t;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (!W(r, c).is_zero() && (best < 0 || W(r, c).degree() < best)) {
                        best = W(r, c).degree();
                        pr = r;
                        pc = c;
                    }
            if (best < 0) break;
            red.swap_rows(t, pr);
            red.swap_cols(t, pc);
            red.scale_row(t, W(t, t).leading().inverse());

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (W(r, t).is_zero()) continue;
                auto [q, rem] = divmod(W(r, t), W(t, t));
                red.add_row(r, t, -q);
                if (!rem.is_zero()) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (W(t, c).is_zero()) continue;
                auto [q, rem] = divmod(W(t, c), W(t, t));
                red.add_col(c, t, -q);
                if (!rem.is_zero()) clean = false;
            }
            if (!clean) continue;

            // divisibility of the trailing block by the pivot
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (!W(r, c).is_zero() && !divmod(W(r, c), W(t, t)).second.is_zero()) {
                        red.add_row(t, r, Poly(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (!W(t, t).is_zero()) red.scale_row(t, W(t, t).leading().inverse());
    }
    SmithForm out{red.U, red.U_inv, {}, red.V, red.V_inv};
    for (std::size_t t = 0; t < n; ++t) out.invariants.push_back(W(t, t));
    return out;
}

RationalMatrix to_rational(const PolyMatrix& m) {
    return m.map([](const Poly& p) { return RationalFunction(p); });
}

RationalMatrix SmithMcMillan::sigma(std::size_t rows, std::size_t cols) const {
    RationalMatrix S(rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i) S(i, i) = RationalFunction(diagonal[i].first, diagonal[i].second);
    return S;
}

SmithMcMillan smith_mcmillan(const RationalMatrix& M) {
    if (M.rows() == 0 || M.cols() == 0) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
    Poly lcm(1);
    for (const auto& f : M.data()) {
        const Poly& d = f.den();
        Poly g = poly_gcd(lcm, d);
        lcm = exact_div(lcm * d, g);
    }
    PolyMatrix N(M.rows(), M.cols());
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c)
            N(r, c) = exact_div(M(r, c).num() * lcm, M(r, c).den());
    SmithForm sf = smith_form(N);
    SmithMcMillan out{sf.U, sf.U_inv, {}, sf.V, sf.V_inv, 0};
    for (const auto& s : sf.invariants) {
        if (s.is_zero()) {
            out.diagonal.emplace_back(Poly(), Poly(1));
            continue;
        }
        ++out.rank;
        Poly g = poly_gcd(s, lcm);
        out.diagonal.emplace_back(exact_div(s, g).monic(), exact_div(lcm, g).monic());
    }
    return out;
}

}  // namespace nyq
