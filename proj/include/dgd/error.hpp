#ifndef DGD_ERROR_HPP
#define DGD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dgd {

enum class errc {
    division_by_zero,
    field_mismatch,
    ring_mismatch,
    map_mismatch,
    base_mismatch,
    not_a_chain_map,
    infinite_rank,
    window_violation,
    window_infeasible,
    unbounded_above,
    not_regular_ring,
    not_coh_finite,
    unsupported_smooth_shape,
    unsupported_ring,
    not_k_flat,
    invalid_argument,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::map_mismatch: return "MapMismatch";
    case errc::base_mismatch: return "BaseMismatch";
    case errc::not_a_chain_map: return "NotAChainMap";
    case errc::infinite_rank: return "InfiniteRank";
    case errc::window_violation: return "WindowViolation";
    case errc::window_infeasible: return "WindowInfeasible";
    case errc::unbounded_above: return "UnboundedAbove";
    case errc::not_regular_ring: return "NotRegularRing";
    case errc::not_coh_finite: return "NotCohFinite";
    case errc::unsupported_smooth_shape: return "UnsupportedSmoothShape";
    case errc::unsupported_ring: return "UnsupportedRing";
    case errc::not_k_flat: return "NotKFlat";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal: return "InternalError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace dgd

#endif
