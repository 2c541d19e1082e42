#ifndef THUEFORMS_DESCRIPTOR_HPP
#define THUEFORMS_DESCRIPTOR_HPP

#include <optional>
#include <string>

#include "thueforms/families.hpp"

namespace thue {

// Family descriptors, e.g.
//   bh:D=1,n=2,c=1
//   shanks:n=1            (optionally ,b1=..,b2=..,c1=..,c2=..)
//   custom:poly=[-1,-3,0,1],alpha=[0,1,0],eps=[1,1,0]
// Integer literals only; field element entries may be rationals "p/q".
struct FamilyDescriptor {
    enum class Kind { BernsteinHasse, Shanks, Custom } kind;
    std::optional<BernsteinHasseParams> bh;
    std::optional<ShanksParams> shanks;
    // custom data
    std::optional<IntPoly> poly;
    std::vector<Rat> alpha_coords, eps_coords;
    std::string text; // canonical input text

    TwistedFamily build() const;
};

// throws UsageError on malformed input
FamilyDescriptor parse_descriptor(const std::string& text);

} // namespace thue

#endif
