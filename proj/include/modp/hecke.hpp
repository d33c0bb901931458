#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modp/presalg.hpp"

namespace modp::hecke {

/// Character of the finite torus of Teichmueller diagonals, as an
/// exponent pair mod p-1: chi(diag([l],[m])) = l^m1 * m^n1.
struct TorusCharacter {
    int mod = 0; // p - 1
    int m = 0, n = 0;

    TorusCharacter() = default;
    TorusCharacter(int p_minus_1, int mm, int nn) : mod(p_minus_1) {
        m = ((mm % mod) + mod) % mod;
        n = ((nn % mod) + mod) % mod;
    }

    TorusCharacter swap() const { return {mod, n, m}; }
    TorusCharacter inv() const { return {mod, -m, -n}; }
    TorusCharacter operator*(const TorusCharacter& o) const { return {mod, m + o.m, n + o.n}; }
    TorusCharacter pow(int e) const { return {mod, m * e, n * e}; }
    bool operator==(const TorusCharacter& o) const {
        return mod == o.mod && m == o.m && n == o.n;
    }
    bool operator!=(const TorusCharacter& o) const { return !(*this == o); }
    bool operator<(const TorusCharacter& o) const {
        return m != o.m ? m < o.m : n < o.n;
    }
    bool is_self_swap() const { return m == n; }
    std::string str() const;
};

/// diag(l, m) -> l / m.
TorusCharacter alpha_char(int p);

/// Smooth character of Q_p^*: unit exponent through Teichmueller plus the
/// value at p. Covers 1, w^k, mu_-1 and their products.
struct SmoothChar {
    int u = 0;   // exponent mod p-1 on units
    felt vp = 1; // value at p

    static SmoothChar trivial() { return {0, 1}; }
    static SmoothChar omega(int k = 1) { return {k, 1}; }
    std::string str(int p) const;
};

/// The data pinning one Hecke algebra: field, central character on
/// Teichmueller units (exponent) and at p, and the idempotent family.
struct HeckeCtx {
    FieldPtr F;
    int zeta_unit = 0;
    felt zeta_p = 1;
    std::vector<TorusCharacter> chars; // (m, zeta_unit - m), m = 0..p-2

    int p() const { return F->p(); }
    int gen_Tns() const { return 0; }
    int gen_TPi() const { return 1; }
    int gen_TPiInv() const { return 2; }
    int gen_e(const TorusCharacter& chi) const;
};

HeckeCtx make_hecke_ctx(FieldPtr F, int zeta_unit, felt zeta_p);

/// Central character data of pi(r, lambda, eta).
std::pair<int, felt> central_char(const FieldPtr& F, int r, const SmoothChar& eta);

/// The presented algebra on T_ns, T_Pi, T_Pi^-1 and the idempotents e_chi,
/// with the quadratic, swap, involution and resolution-of-identity
/// relations.
presalg::AlgebraPtr hecke_algebra(const HeckeCtx& h);

/// eta evaluated at the Teichmueller lift of x in F_p^*.
felt eval_unit(const HeckeCtx& h, const SmoothChar& eta, int x);

/// The 2-dimensional module M(r, lambda, eta) on the basis (v1, v2).
/// Requires zeta(p) = 1 (UnsupportedCentralCharacter otherwise) and the
/// ctx central character to match (r, eta).
presalg::AlgebraModule module_M(const HeckeCtx& h, int r, felt lambda, const SmoothChar& eta);

/// The 4-dimensional module E_{l1,l2} on (v_chi, v_chi^s, w_chi, w_chi^s),
/// for 0 < r < p-1.
presalg::AlgebraModule module_E(const HeckeCtx& h, felt l1, felt l2, int r,
                                const SmoothChar& eta);

/// 1-dimensional module: chi must be swap-fixed, c_ns in {0,-1},
/// c_pi^2 = zeta(p)^-1.
presalg::AlgebraModule module_char(const HeckeCtx& h, const TorusCharacter& chi, felt c_ns,
                                   felt c_pi);

struct SpTrivSplit {
    FMat sub_basis;               // the unique 1-dim submodule of M(0,1)
    presalg::AlgebraModule sub;   // scalars (T_ns, T_Pi) = (-1, -1)
    presalg::AlgebraModule quot;  // scalars (0, 1)
    felt sub_tns = 0, sub_tpi = 0, quot_tns = 0, quot_tpi = 0;
    int n_onedim_submodules = 0;  // exhaustive count, expected 1
};

/// Exhaustive submodule search in M(0,1) over the trivial central character.
SpTrivSplit sp_triv_split(const HeckeCtx& h);

/// Multiset of torus characters with multiplicity = rank of the e_chi image.
std::vector<TorusCharacter> torus_isotype(const HeckeCtx& h, const presalg::AlgebraModule& M);

struct PiSpec {
    enum class Kind { Trivial, Steinberg, Principal, Supersingular } kind;
    int r = 0;
    felt lambda = 0;
    SmoothChar eta = SmoothChar::trivial();

    static PiSpec trivial() { return {Kind::Trivial, 0, 0, SmoothChar::trivial()}; }
    static PiSpec steinberg() { return {Kind::Steinberg, 0, 0, SmoothChar::trivial()}; }
    static PiSpec principal(int r, felt lambda, SmoothChar eta = SmoothChar::trivial()) {
        return {Kind::Principal, r, lambda, eta};
    }
    static PiSpec supersingular(int r, SmoothChar eta = SmoothChar::trivial()) {
        return {Kind::Supersingular, r, 0, eta};
    }
    std::string str(int p) const;
};

/// Hecke shadow of pi itself.
presalg::AlgebraModule shadow(const HeckeCtx& h, const PiSpec& pi);

/// Central character of the G-representation behind a PiSpec.
std::pair<int, felt> pi_central_char(const FieldPtr& F, const PiSpec& pi);

/// First derived shadow, assembled from the literature table:
/// supersingular -> shadow + shadow; trivial -> M(p-3,1,w);
/// steinberg -> M(p-1,1); principal(r,l) -> M(r,l) + M(s, l^-1, w^{r+1})
/// with s = p-3-r mod p-1 taken in [0, p-2].
presalg::AlgebraModule r1_module(const HeckeCtx& h, const PiSpec& pi);

} // namespace modp::hecke
