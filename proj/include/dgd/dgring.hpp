#ifndef DGD_DGRING_HPP
#define DGD_DGRING_HPP

#include "dgd/modules.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace dgd {

class DGRing;
using DGRingRef = std::shared_ptr<const DGRing>;

// Exterior monomial over the odd generators, as a bitmask.
using ExtMon = uint32_t;

struct ExtGen {
    std::string name;
    int degree; // odd, <= -1
};

// Element of a DG ring: sum of (exterior monomial, degree-0 coefficient).
// Coefficients are normal forms in the base quotient ring; terms sorted by
// ascending mask with no zero coefficients.
class DGElem {
  public:
    DGElem() = default;
    explicit DGElem(DGRingRef ring) : ring_(std::move(ring)) {}

    static DGElem zero(const DGRingRef& r) { return DGElem(r); }
    static DGElem from_poly(const DGRingRef& r, const Poly& coeff);
    static DGElem monomial(const DGRingRef& r, ExtMon m, const Poly& coeff);
    static DGElem one(const DGRingRef& r);
    static DGElem gen(const DGRingRef& r, int t);

    const DGRingRef& ring() const { return ring_; }
    const std::vector<std::pair<ExtMon, Poly>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // coefficient of a given exterior monomial (zero poly if absent)
    Poly coeff_of(ExtMon m) const;

    DGElem operator+(const DGElem& o) const;
    DGElem operator-(const DGElem& o) const;
    DGElem operator-() const;
    DGElem operator*(const DGElem& o) const;
    DGElem scaled(const Poly& c) const;

    bool operator==(const DGElem& o) const;
    bool operator!=(const DGElem& o) const { return !(*this == o); }

    // cohomological degree when homogeneous; nullopt for 0 or mixed
    std::optional<int> degree() const;
    bool homogeneous_of(int deg) const;

    std::string to_string() const;

    static DGElem from_terms(DGRingRef r, std::vector<std::pair<ExtMon, Poly>> ts);

  private:
    DGRingRef ring_;
    std::vector<std::pair<ExtMon, Poly>> terms_;
};

// Presentation of a non-positive commutative DG ring: a degree-0 quotient
// ring plus finitely many odd exterior generators with differentials.
class DGRing : public std::enable_shared_from_this<DGRing> {
  public:
    // diffs[t] must be homogeneous of degree gens[t].degree + 1 over the
    // finished ring; construction defers validation to validate_dg_ring.
    static DGRingRef make(RingRef base, std::vector<ExtGen> gens,
                          std::vector<DGElem> diffs);
    // Degree-0 DG ring.
    static DGRingRef of_ring(RingRef base) { return make(std::move(base), {}, {}); }
    // Koszul-type ring: one degree -1 generator per listed element.
    static DGRingRef koszul(const RingRef& base, const std::vector<Poly>& elems);

    const RingRef& base() const { return base_; }
    const std::vector<ExtGen>& ext_gens() const { return gens_; }
    int n_ext() const { return (int)gens_.size(); }
    const DGElem& diff_of_gen(int t) const { return diffs_[(size_t)t]; }

    int mask_degree(ExtMon m) const;
    // bottom structural degree: sum of all generator degrees
    int bottom_degree() const;
    // exterior monomials of a given degree, ascending mask
    const std::vector<ExtMon>& masks_of_degree(int d) const;

    // H^0(A) = base / (image of degree -1 part)
    RingRef bar() const;

    // differential extended to elements by the graded Leibniz rule
    DGElem d(const DGElem& a) const;

    std::string describe() const;

  private:
    DGRing() = default;
    int mask_degree_raw(ExtMon m) const {
        int d = 0;
        for (size_t t = 0; t < gens_.size(); ++t)
            if (m & (1u << t)) d += gens_[t].degree;
        return d;
    }
    RingRef base_;
    std::vector<ExtGen> gens_;
    std::vector<DGElem> diffs_;
    std::map<int, std::vector<ExtMon>> by_degree_;
    RingRef bar_;
};

inline bool same_dgring(const DGRingRef& a, const DGRingRef& b) { return a.get() == b.get(); }

// Koszul sign for multiplying disjoint odd monomials a*b.
int ext_mul_sign(ExtMon a, ExtMon b);

// validate_dg_ring: returns (not raises) a named violation.
struct DGValidation {
    bool ok = true;
    std::string violation; // DegreeMismatch | LeibnizFailure | DSquareNonzero
    std::string detail;
};
DGValidation validate_dg_ring(const DGRingRef& r);

// A map of DG rings, given on generators.
class DGRingMap {
  public:
    DGRingMap() = default;
    // Checks: images of ideal generators vanish, degrees match, and the map
    // commutes with differentials; throws MapMismatch otherwise.
    DGRingMap(DGRingRef src, DGRingRef tgt, std::vector<Poly> var_images,
              std::vector<DGElem> gen_images);

    static DGRingMap identity(const DGRingRef& r);

    const DGRingRef& src() const { return src_; }
    const DGRingRef& tgt() const { return tgt_; }
    bool is_identity_map() const;

    Poly apply(const Poly& p) const;      // degree 0
    DGElem apply(const DGElem& a) const;  // any element

    DGRingMap then(const DGRingMap& g) const; // g after this

    RingMapData base_map() const; // on degree-0 parts
    RingMapData bar_map() const;  // on H^0

    // classified flags (computed on demand, cached)
    bool is_cohomologically_finite() const;
    // polynomial-extension shape: tgt = src (+) m new degree-0 variables;
    // returns the number of adjoined variables, or nullopt
    std::optional<int> supported_smooth_shape() const;
    // fingerprint check in a window (implemented with cohomology machinery)
    bool is_quasi_iso(int lo, int hi) const;

    const std::vector<Poly>& var_images() const { return var_images_; }
    const std::vector<DGElem>& gen_images() const { return gen_images_; }

  private:
    DGRingRef src_, tgt_;
    std::vector<Poly> var_images_;
    std::vector<DGElem> gen_images_;
    mutable std::optional<bool> coh_finite_;
};

// A (+)_k B with disjointly renamed generators; also returns inclusions.
struct DGTensor {
    DGRingRef ring;
    DGRingMap inc_left, inc_right;
};
DGTensor tensor_dgrings(const DGRingRef& a, const DGRingRef& b);

// A^e = A (+)_k A with the multiplication map back onto A.
struct Enveloping {
    DGRingRef ring;
    DGRingMap inc_left, inc_right;
    DGRingMap mult; // A^e -> A
};
Enveloping enveloping(const DGRingRef& a);

// B = A with extra odd generators adjoined (a semi-free extension);
// diff_exprs are over the resulting ring.
DGRingRef extend_dgring(const DGRingRef& a, const std::vector<ExtGen>& extra,
                        const std::vector<DGElem>& diff_exprs);
// Recognize tgt as src + extra odd generators; returns the extra block
// start index or nullopt.
std::optional<int> semifree_extension_of(const DGRingRef& tgt, const DGRingRef& src);

} // namespace dgd

#endif
