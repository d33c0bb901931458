#pragma once

#include <utility>
#include <vector>

#include "modp/hecke.hpp"
#include "modp/presalg.hpp"

namespace modp::envelope {

/// Finite-level model of the injective envelope of a torus character chi
/// in H-twisted representations of a cyclic p-group: the twisted regular
/// representation of C_{p^m}. Generators of the underlying group algebra:
/// u (cyclic shift), h1 = diag([g],1), h2 = diag(1,[g]) for the least
/// primitive root g mod p.
struct EnvelopeModule {
    hecke::TorusCharacter chi;
    int p = 0, m = 0;
    int dim = 0; // p^m
    int g = 0;   // primitive root used for h1, h2
    FieldPtr F;
    presalg::AlgebraModule mod;

    int gen_u() const { return 0; }
    int gen_h1() const { return 1; }
    int gen_h2() const { return 2; }
    FMat X() const; // action(u) - 1
};

/// m in {1,2}, p^m <= 343.
EnvelopeModule envelope_make(FieldPtr F, const hecke::TorusCharacter& chi, int m);

/// Torus character of soc_k / soc_{k-1} (kernel filtration of X),
/// expected chi * alpha^-k at index k.
std::vector<hecke::TorusCharacter> socle_series(const EnvelopeModule& J);

/// e_0 = 0, e_n = r + p(p-1-r) + p^2 e_{n-1};
/// lambda_n = ((-1)^r r! (p-1-r)!)^n as a field scalar.
std::pair<long long, felt> minj_recursion(const FieldPtr& F, int r, int n);

/// Finite-level check of the generating identity: an H-eigenvector of
/// character chi at X-depth e_n maps under lambda_n X^{e_n} onto the socle
/// line, which again carries chi. Requires e_n < p^m.
bool minj_identity_check(const EnvelopeModule& J, int r, int n);

/// Multiplicity of psi in the torus action on (J/soc)^{u-invariants};
/// also asserts Ext^1(psi, J) = 0 through the presented-algebra engine.
int ext1_envelope(const hecke::TorusCharacter& psi, const EnvelopeModule& J);

/// The 1-dimensional module psi over the same group algebra (u acts by 1).
presalg::AlgebraModule char_module(const EnvelopeModule& J, const hecke::TorusCharacter& psi);

} // namespace modp::envelope
