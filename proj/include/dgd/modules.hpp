#ifndef DGD_MODULES_HPP
#define DGD_MODULES_HPP

#include "dgd/groebner.hpp"

#include <string>
#include <vector>

namespace dgd {

// Finite presentation ring^n_gens / <relations>.
struct ModulePres {
    RingRef ring;
    int n_gens = 0;
    std::vector<FreeVec> relations; // over ring, rank n_gens

    bool is_zero_module() const;
    std::string to_string() const;
};

// GB of the lift of a submodule of ring^rank to the ambient polynomial
// ring (ideal multiples of the basis included). NF against it is the
// canonical representative modulo the submodule and the ring ideal.
struct SubmoduleGB {
    RingRef ring; // the (possibly quotient) ring the submodule lives over
    int rank = 0;
    std::vector<FreeVec> gb; // over ring->ambient()

    FreeVec reduce(const FreeVec& v) const;
    bool contains(const FreeVec& v) const;
};

SubmoduleGB submodule_gb(const std::vector<FreeVec>& gens, const RingRef& ring, int rank);

// Lift of a vector over a quotient ring to the ambient ring.
FreeVec lift_vec(const FreeVec& v, const RingRef& ambient);
// Reduce an ambient vector into the quotient ring (NF mod ideal).
FreeVec into_ring(const FreeVec& v, const RingRef& ring);

// Generators of the syzygy module of `gens` inside ring^rank; output
// vectors live in ring^{gens.size()}, canonical (reduced module GB).
std::vector<FreeVec> syzygies(const std::vector<FreeVec>& gens, const RingRef& ring, int rank);

// Spec-level operation: syzygies -> ModulePres of the syzygy module.
ModulePres syzygy_presentation(const std::vector<FreeVec>& gens, const RingRef& ring, int rank);

// {c in ring^a : sum c_i cols_i lies in span(rels)}; cols/rels have rank b.
std::vector<FreeVec> kernel_mod(const std::vector<FreeVec>& cols,
                                const std::vector<FreeVec>& rels, const RingRef& ring, int b);

// Express v as a combination of gens modulo the ring ideal; returns
// coefficients over ring, or empty if v is not in the span.
bool lift_through(const std::vector<FreeVec>& gens, const RingRef& ring, int rank,
                  const FreeVec& v, std::vector<Poly>& coeffs);

// GB of a span with cofactor tracking, built once and reused for many lifts.
class SpanWithCofactors {
  public:
    SpanWithCofactors() = default;
    SpanWithCofactors(const std::vector<FreeVec>& gens, RingRef ring, int rank);
    bool lift(const FreeVec& v, std::vector<Poly>& coeffs) const;
    bool contains(const FreeVec& v) const;

  private:
    RingRef ring_;
    int rank_ = 0;
    int big_ = 0;
    size_t m_ = 0;
    ModuleOrder mo_;
    std::vector<FreeVec> gbw_;
};

// k-dimension of a presented module; -1 means infinite.
long k_dimension(const ModulePres& m);
// dim_k M/(x_1..x_n)M — minimal generators at the origin (graded Nakayama).
int min_gens(const ModulePres& m);
// Reduced GB of Ann(M) over the ring (canonical, over ambient representatives).
std::vector<Poly> annihilator(const ModulePres& m);

std::vector<Poly> ideal_intersection(const std::vector<Poly>& a, const std::vector<Poly>& b,
                                     const RingRef& ring);

// Greedy irredundant subset of a generating list (deterministic order).
std::vector<FreeVec> prune_generators(const std::vector<FreeVec>& gens, const RingRef& ring,
                                      int rank);

// Canonicalize: relations replaced by their reduced module GB image in ring.
ModulePres canonical_presentation(ModulePres m);

// ---- ring maps on degree-0 data ----

// k-algebra map src -> tgt given by images of the source variables.
struct RingMapData {
    RingRef src;
    RingRef tgt;
    std::vector<Poly> images; // over tgt, one per src var

    Poly apply(const Poly& p) const;
};

// Is tgt module-finite over the image of src? (block-order criterion)
bool is_module_finite(const RingMapData& f);
// Preimage f^{-1}(J) as a reduced GB over src; J given by generators over tgt.
std::vector<Poly> preimage_ideal(const RingMapData& f, const std::vector<Poly>& J);

} // namespace dgd

#endif
