#include "nyq/feedback.hpp"

#include <algorithm>

namespace nyq {

const char* to_string(Stabilizes s) noexcept {
    switch (s) {
        case Stabilizes::Yes: return "yes";
        case Stabilizes::No: return "no";
        case Stabilizes::Degenerate: return "degenerate";
    }
    return "?";
}

const char* to_string(OracleAnswer a) noexcept {
    switch (a) {
        case OracleAnswer::Yes: return "yes";
        case OracleAnswer::No: return "no";
        case OracleAnswer::IllPosed: return "ill-posed";
    }
    return "?";
}

Verdict assemble_verdict(IndexOutcome a, IndexOutcome b, IndexOutcome c) {
    Verdict v;
    v.det_I_minus_CP = std::move(a);
    v.det_DP = std::move(b);
    v.det_DtildeC = std::move(c);
    const std::pair<const char*, const IndexOutcome*> parts[] = {
        {"det(I - CP)", &v.det_I_minus_CP}, {"det D_P", &v.det_DP}, {"det D~_C", &v.det_DtildeC}};
    bool degenerate = false, all_invertible = true, all_certified = true;
    for (const auto& [name, o] : parts) {
        if (!o->note.empty()) v.notes.push_back(std::string(name) + ": " + o->note);
        degenerate = degenerate || o->degenerate;
        all_invertible = all_invertible && o->invertible_in_S;
        all_certified = all_certified && o->certificate.certified;
    }
    if (degenerate) {
        v.stabilizes = Stabilizes::Degenerate;
        v.notes.push_back("boundary test within tolerance; the criterion is numerically undecidable here");
        return v;
    }
    if (!all_invertible) {
        v.stabilizes = Stabilizes::No;
        v.notes.push_back("a determinant is not invertible in the ambient algebra");
        return v;
    }
    v.index_sum = index_combine(index_combine(*v.det_I_minus_CP.index, *v.det_DP.index), *v.det_DtildeC.index);
    Stabilizes tentative = index_is_identity(*v.index_sum) ? Stabilizes::Yes : Stabilizes::No;
    if (!all_certified) {
        v.stabilizes = Stabilizes::Degenerate;
        v.notes.push_back(std::string("uncertified invertibility; tentative verdict ") + to_string(tentative));
        return v;
    }
    v.stabilizes = tentative;
    return v;
}

IndexOutcome quotient_outcome(const IndexOutcome& a, const IndexOutcome& b, const IndexOutcome& c) {
    if (!a.invertible_in_S || !b.invertible_in_S || !c.invertible_in_S) {
        const IndexOutcome& bad = !a.invertible_in_S ? a : (!b.invertible_in_S ? b : c);
        return IndexOutcome::not_invertible(bad.note.empty() ? "a factor is not invertible" : bad.note,
                                            a.degenerate || b.degenerate || c.degenerate);
    }
    IndexValue idx = index_combine(*a.index, index_negate(index_combine(*b.index, *c.index)));
    return IndexOutcome::invertible(idx, a.certificate.min_modulus,
                                    a.certificate.certified && b.certificate.certified && c.certificate.certified,
                                    "det(G~_C G_P) over det D~_C det D_P; modulus bound is that of the numerator");
}

RationalMatrix closed_loop(const RationalMatrix& P, const RationalMatrix& C) {
    if (C.rows() != P.cols() || C.cols() != P.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "plant " + P.shape() + " and controller " + C.shape());
    }
    const std::size_t m = P.cols();
    RationalMatrix M = RationalMatrix::identity(m) - C * P;
    RationalFunction d = det(M);
    if (d.is_zero()) throw Error(ErrorKind::IllPosedLoop, "det(I - CP) vanishes identically");
    RationalMatrix inv = d.inverse() * adjugate(M);
    RationalMatrix left = vstack(P, RationalMatrix::identity(m));
    RationalMatrix right = hstack(-C, RationalMatrix::identity(m));
    return left * inv * right;
}

}  // namespace nyq
