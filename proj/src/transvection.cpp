#include "q5/transvection.hpp"

namespace q5 {

TransvectionSignature TransvectionSignature::parse(std::string_view digits) {
    if (digits.size() != kSlots) throw InputError("transvection signature needs five digits");
    TransvectionSignature sig;
    for (int s = 0; s < kSlots; ++s) {
        if (digits[s] < '0' || digits[s] > '9') throw InputError("bad signature digit");
        sig.eps[s] = digits[s] - '0';
    }
    return sig;
}

TransvectionSignature TransvectionSignature::all_but(int slot) {
    TransvectionSignature sig;
    sig.eps.fill(1);
    sig.eps[slot] = 0;
    return sig;
}

std::string invariant_name(Invariant inv) {
    switch (inv) {
        case Invariant::Dx: return "Dx";
        case Invariant::Dy: return "Dy";
        case Invariant::Dz: return "Dz";
        case Invariant::Dt: return "Dt";
        case Invariant::Du: return "Du";
        case Invariant::F: return "F";
    }
    return "?";
}

Invariant parse_invariant(std::string_view name) {
    for (Invariant inv : kAllInvariants)
        if (invariant_name(inv) == name) return inv;
    throw InputError("unknown invariant '" + std::string(name) + "' (expected Dx, Dy, Dz, Dt, Du or F)");
}

Covariant<Rational> symbolic_ground_form() {
    Covariant<Rational> f;
    f.a_degree = 1;
    f.multidegree = {1, 1, 1, 1, 1};
    for (int index = 0; index < kAmplitudes; ++index) {
        Monomial m = Monomial::of(var::amp(index));
        for (int slot = 0; slot < kSlots; ++slot) m = m.times(var::binary(slot, (index >> (4 - slot)) & 1), 1);
        f.body.add_term(m, Rational(1));
    }
    return f;
}

}  // namespace q5
