#include "dgd/kaehler.hpp"

namespace dgd {

Poly partial(const Poly& p, int v) {
    const RingRef& R = p.ring();
    Poly out(R);
    for (const auto& t : p.terms()) {
        int e = t.mon.e[(size_t)v];
        if (e == 0) continue;
        Expo m = t.mon;
        m.e[(size_t)v] = (uint16_t)(e - 1);
        FieldElem c = t.coeff * FieldElem::of_int(R->field(), e);
        out = out + Poly::monomial(R, m, c);
    }
    return out;
}

ModulePres kaehler_presentation(const RingMapData& f) {
    const RingRef& B = f.tgt;
    int n = B->nvars();
    ModulePres m;
    m.ring = B;
    m.n_gens = n;
    auto jac_row = [&](const Poly& F) {
        FreeVec row(B, n);
        Poly amb = F.with_ring(B->ambient());
        for (int j = 0; j < n; ++j) row.comps[(size_t)j] = partial(amb, j).into(B);
        return row;
    };
    for (const auto& F : B->ideal_gb()) {
        FreeVec row = jac_row(F);
        if (!row.is_zero()) m.relations.push_back(row);
    }
    // images of source variables are constants of the extension
    for (const auto& img : f.images) {
        FreeVec row = jac_row(img.into(B).with_ring(B->ambient()));
        if (!row.is_zero()) m.relations.push_back(row);
    }
    return canonical_presentation(std::move(m));
}

} // namespace dgd
