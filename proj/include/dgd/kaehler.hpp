#ifndef DGD_KAEHLER_HPP
#define DGD_KAEHLER_HPP

#include "dgd/modules.hpp"

namespace dgd {

// Formal partial derivative with respect to variable v.
Poly partial(const Poly& p, int v);

// Presentation of the Kaehler differentials of tgt over src for a map of
// quotient rings: generators d(y_j) for the target variables, relations
// the Jacobian rows of the target ideal generators and of the images of
// the source variables.
ModulePres kaehler_presentation(const RingMapData& f);

} // namespace dgd

#endif
