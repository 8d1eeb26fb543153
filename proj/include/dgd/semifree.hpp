#ifndef DGD_SEMIFREE_HPP
#define DGD_SEMIFREE_HPP

#include "dgd/dgring.hpp"

namespace dgd {

struct SfGen {
    std::string name;
    int degree;
};

// Semi-free DG module: free generators with cohomological degrees and a
// differential matrix over A, column j encoding d(g_j) = sum_i a_ij g_i.
// Entry a_ij is homogeneous of degree deg(g_j) + 1 - deg(g_i).
class SemiFreeDGMod {
  public:
    SemiFreeDGMod() = default;
    explicit SemiFreeDGMod(DGRingRef ring) : ring_(std::move(ring)) {}

    static SemiFreeDGMod free_module(const DGRingRef& r, std::vector<SfGen> gens);
    // rank one in degree 0 with zero differential: A itself
    static SemiFreeDGMod unit(const DGRingRef& r);

    const DGRingRef& ring() const { return ring_; }
    const std::vector<SfGen>& gens() const { return gens_; }
    int n_gens() const { return (int)gens_.size(); }
    int gen_degree(int j) const { return gens_[(size_t)j].degree; }
    int max_gen_degree() const;
    int min_gen_degree() const;
    // structural bounds on cohomology support
    int top_degree() const { return max_gen_degree(); }
    int bottom_degree() const { return min_gen_degree() + ring_->bottom_degree(); }

    const std::vector<std::pair<int, DGElem>>& column(int j) const {
        return cols_[(size_t)j];
    }
    DGElem entry(int i, int j) const;
    void set_entry(int i, int j, const DGElem& a);
    int add_gen(const std::string& name, int degree); // returns index

    std::string describe() const;

  private:
    DGRingRef ring_;
    std::vector<SfGen> gens_;
    std::vector<std::vector<std::pair<int, DGElem>>> cols_;
};

// Throws on degree incompatibility or d^2 != 0.
void validate_semifree(const SemiFreeDGMod& m);

// H^i(M[n]) = H^{i+n}(M); differential rescaled by (-1)^n.
SemiFreeDGMod shift(const SemiFreeDGMod& m, int n);

// Degree-0 chain map as a matrix: column j expresses phi(m_j) over N-gens.
struct ChainMap {
    const SemiFreeDGMod* src = nullptr;
    const SemiFreeDGMod* tgt = nullptr;
    std::vector<std::vector<std::pair<int, DGElem>>> cols;
};

// cone(phi) = N (+) M[1]; throws NotAChainMap if phi fails to commute with d.
SemiFreeDGMod cone(const ChainMap& phi);

// Hom_A(P, N) for finite semi-free P: computes RHom when P is K-projective.
SemiFreeDGMod hom_complex(const SemiFreeDGMod& p, const SemiFreeDGMod& n);

// M (x)_A N with Koszul signs; computes the derived tensor when one factor
// is semi-free (always true here).
SemiFreeDGMod tensor_complex(const SemiFreeDGMod& m, const SemiFreeDGMod& n);

// Lf^*(M) = M (x)_A B along f : A -> B.
SemiFreeDGMod base_change_module(const SemiFreeDGMod& m, const DGRingMap& f);

// External tensor over the base field: M over A, N over B, result over
// a ring representing A (x)_k B with the given inclusions.
SemiFreeDGMod external_tensor(const SemiFreeDGMod& m, const SemiFreeDGMod& n,
                              const DGRingMap& inc_left, const DGRingMap& inc_right);

// Multiplication-by-scalar chain map M -> M (for cone tests etc.)
ChainMap scalar_map(const SemiFreeDGMod& m, const Poly& c);

} // namespace dgd

#endif
