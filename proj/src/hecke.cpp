#include "modp/hecke.hpp"

#include <algorithm>
#include <set>

namespace modp::hecke {

using presalg::AlgebraModule;
using presalg::AlgebraPtr;
using presalg::Generator;
using presalg::Relation;
using presalg::Word;

std::string TorusCharacter::str() const {
    return "chi(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

TorusCharacter alpha_char(int p) { return {p - 1, 1, -1}; }

std::string SmoothChar::str(int p) const {
    std::string s;
    int uu = ((u % (p - 1)) + (p - 1)) % (p - 1);
    if (uu == 1) s = "w";
    else if (uu > 1) s = "w^" + std::to_string(uu);
    bool minus = vp == static_cast<felt>(p - 1);
    if (minus) s += s.empty() ? "mu-1" : "*mu-1";
    else if (vp != 1) s += (s.empty() ? "mu(" : "*mu(") + std::to_string(vp) + ")";
    return s.empty() ? "1" : s;
}

int HeckeCtx::gen_e(const TorusCharacter& chi) const {
    for (size_t i = 0; i < chars.size(); ++i)
        if (chars[i] == chi) return 3 + static_cast<int>(i);
    raise(ErrKind::ContextMismatch, "no idempotent for " + chi.str() + " at this central character");
}

HeckeCtx make_hecke_ctx(FieldPtr F, int zeta_unit, felt zeta_p) {
    HeckeCtx h;
    h.F = std::move(F);
    const int pm1 = h.F->p() - 1;
    h.zeta_unit = ((zeta_unit % pm1) + pm1) % pm1;
    if (zeta_p == 0) raise(ErrKind::InvalidCharacterData, "zeta(p) must be a unit");
    h.zeta_p = zeta_p;
    for (int m = 0; m < pm1; ++m) h.chars.emplace_back(pm1, m, h.zeta_unit - m);
    return h;
}

std::pair<int, felt> central_char(const FieldPtr& F, int r, const SmoothChar& eta) {
    const int pm1 = F->p() - 1;
    int zu = ((r + 2 * eta.u) % pm1 + pm1) % pm1;
    return {zu, F->mul(eta.vp, eta.vp)};
}

AlgebraPtr hecke_algebra(const HeckeCtx& h) {
    const FieldCtx& F = *h.F;
    std::vector<Generator> gens;
    gens.push_back({"T_ns", -1});
    gens.push_back({"T_Pi", 2});
    gens.push_back({"T_Pi_inv", 1});
    for (const auto& chi : h.chars)
        gens.push_back({"e_" + std::to_string(chi.m), -1});

    const felt one = 1;
    const felt minus_one = F.neg(1);
    std::vector<Relation> rels;
    rels.push_back({{{one, {1, 2}}}, one, "T_Pi*T_Pi_inv=1"});
    rels.push_back({{{one, {2, 1}}}, one, "T_Pi_inv*T_Pi=1"});
    rels.push_back({{{one, {1, 1}}}, F.inv(h.zeta_p), "T_Pi^2=zeta(p)^-1"});

    const int nch = static_cast<int>(h.chars.size());
    auto e = [&](int i) { return 3 + i; };
    auto swap_index = [&](int i) {
        TorusCharacter s = h.chars[i].swap();
        for (int j = 0; j < nch; ++j)
            if (h.chars[j] == s) return j;
        raise(ErrKind::ContextMismatch, "swap character missing");
    };

    for (int i = 0; i < nch; ++i)
        for (int j = 0; j < nch; ++j) {
            Relation r;
            r.name = "e_" + std::to_string(i) + "*e_" + std::to_string(j);
            r.terms.push_back({one, {e(i), e(j)}});
            if (i == j) r.terms.push_back({minus_one, {e(i)}});
            r.constant = 0;
            rels.push_back(std::move(r));
        }
    {
        Relation r;
        r.name = "sum e_chi = 1";
        for (int i = 0; i < nch; ++i) r.terms.push_back({one, {e(i)}});
        r.constant = one;
        rels.push_back(std::move(r));
    }
    for (int i = 0; i < nch; ++i) {
        int s = swap_index(i);
        rels.push_back({{{one, {e(i), 0}}, {minus_one, {0, e(s)}}}, 0,
                        "e_" + std::to_string(i) + "*T_ns = T_ns*e_" + std::to_string(s)});
        rels.push_back({{{one, {e(i), 1}}, {minus_one, {1, e(s)}}}, 0,
                        "e_" + std::to_string(i) + "*T_Pi = T_Pi*e_" + std::to_string(s)});
        rels.push_back({{{one, {e(i), 0, 0}}, {one, {e(i), e(s), 0}}}, 0,
                        "e_" + std::to_string(i) + "*T_ns^2 = -e*e^s*T_ns"});
    }
    return presalg::algebra_make(h.F, std::move(gens), std::move(rels));
}

felt eval_unit(const HeckeCtx& h, const SmoothChar& eta, int x) {
    return h.F->pow(h.F->from_int(x), ((eta.u % (h.p() - 1)) + (h.p() - 1)) % (h.p() - 1));
}

namespace {

void require_ctx_match(const HeckeCtx& h, int r, const SmoothChar& eta) {
    auto [zu, zp] = central_char(h.F, r, eta);
    if (zp != 1)
        raise(ErrKind::UnsupportedCentralCharacter,
              "module constructors assume zeta(p) = 1, got eta(p)^2 != 1");
    if (h.zeta_p != 1)
        raise(ErrKind::UnsupportedCentralCharacter, "ctx has zeta(p) != 1");
    if (zu != h.zeta_unit)
        raise(ErrKind::ContextMismatch, "central character on units does not match ctx");
}

} // namespace

AlgebraModule module_M(const HeckeCtx& h, int r, felt lambda, const SmoothChar& eta) {
    const int p = h.p();
    if (r < 0 || r > p - 1) raise(ErrKind::RangeError, "r out of [0, p-1]");
    require_ctx_match(h, r, eta);
    const FieldCtx& F = *h.F;

    TorusCharacter chi(p - 1, r + eta.u, eta.u);
    TorusCharacter chis = chi.swap();
    AlgebraPtr A = hecke_algebra(h);

    std::vector<FMat> action(A->ngens(), FMat(h.F, 2, 2));
    // eta(-p^-1) = eta([-1]) * eta(p)^-1
    felt eta_mp = F.mul(eval_unit(h, eta, -1), F.inv(eta.vp));
    felt c = F.mul(eta_mp, lambda);

    FMat Tns(h.F, 2, 2);
    if (r == p - 1) Tns.at(0, 0) = F.neg(1);
    Tns.at(1, 0) = c;
    if (r == 0) Tns.at(1, 1) = F.neg(1); // v2(1 + T_ns) = c v1
    action[h.gen_Tns()] = Tns;

    FMat TPi(h.F, 2, 2);
    TPi.at(0, 1) = 1;
    TPi.at(1, 0) = 1; // zeta(p) = 1
    action[h.gen_TPi()] = TPi;
    action[h.gen_TPiInv()] = TPi;

    for (size_t i = 0; i < h.chars.size(); ++i) {
        FMat E(h.F, 2, 2);
        if (h.chars[i] == chi) E.at(0, 0) = 1;
        if (h.chars[i] == chis) E.at(1, 1) = 1;
        action[3 + i] = E;
    }
    return presalg::make_module(A, std::move(action));
}

AlgebraModule module_E(const HeckeCtx& h, felt l1, felt l2, int r, const SmoothChar& eta) {
    const int p = h.p();
    if (r <= 0 || r >= p - 1) raise(ErrKind::RangeError, "module_E needs 0 < r < p-1");
    require_ctx_match(h, r, eta);

    TorusCharacter chi(p - 1, r + eta.u, eta.u);
    TorusCharacter chis = chi.swap();
    AlgebraPtr A = hecke_algebra(h);

    // Basis order (v_chi, v_chi^s, w_chi, w_chi^s).
    std::vector<FMat> action(A->ngens(), FMat(h.F, 4, 4));
    FMat Tns(h.F, 4, 4);
    Tns.at(2, 1) = l1; // w_chi T_ns = l1 v_chi^s
    Tns.at(3, 0) = l2; // w_chi^s T_ns = l2 v_chi
    action[h.gen_Tns()] = Tns;

    FMat TPi(h.F, 4, 4);
    TPi.at(0, 1) = 1;
    TPi.at(1, 0) = 1;
    TPi.at(2, 3) = 1;
    TPi.at(3, 2) = 1;
    action[h.gen_TPi()] = TPi;
    action[h.gen_TPiInv()] = TPi;

    for (size_t i = 0; i < h.chars.size(); ++i) {
        FMat E(h.F, 4, 4);
        if (h.chars[i] == chi) {
            E.at(0, 0) = 1;
            E.at(2, 2) = 1;
        }
        if (h.chars[i] == chis) {
            E.at(1, 1) = 1;
            E.at(3, 3) = 1;
        }
        action[3 + i] = E;
    }
    return presalg::make_module(A, std::move(action));
}

AlgebraModule module_char(const HeckeCtx& h, const TorusCharacter& chi, felt c_ns, felt c_pi) {
    const FieldCtx& F = *h.F;
    if (chi.mod != h.p() - 1) raise(ErrKind::ContextMismatch, "character modulus");
    if (!chi.is_self_swap())
        raise(ErrKind::InvalidCharacterData, "1-dimensional module needs chi = chi^s");
    // quadratic relation with chi = chi^s forces c_ns^2 = -c_ns
    if (F.mul(c_ns, c_ns) != F.neg(c_ns))
        raise(ErrKind::InvalidCharacterData, "c_ns must satisfy c_ns^2 = -c_ns");
    if (F.mul(c_pi, c_pi) != F.inv(h.zeta_p))
        raise(ErrKind::InvalidCharacterData, "c_pi^2 must equal zeta(p)^-1");

    AlgebraPtr A = hecke_algebra(h);
    std::vector<FMat> action(A->ngens(), FMat(h.F, 1, 1));
    action[h.gen_Tns()].at(0, 0) = c_ns;
    action[h.gen_TPi()].at(0, 0) = c_pi;
    action[h.gen_TPiInv()].at(0, 0) = F.inv(c_pi);
    action[h.gen_e(chi)].at(0, 0) = 1;
    return presalg::make_module(A, std::move(action));
}

SpTrivSplit sp_triv_split(const HeckeCtx& h) {
    if (h.zeta_unit != 0 || h.zeta_p != 1)
        raise(ErrKind::ContextMismatch, "sp_triv_split needs the trivial central character");
    AlgebraModule M = module_M(h, 0, 1, SmoothChar::trivial());

    const int q = h.F->q();
    std::set<std::vector<felt>> lines;
    for (int code = 1; code < q * q; ++code) {
        std::vector<felt> v = {static_cast<felt>(code % q), static_cast<felt>(code / q)};
        FMat seed(h.F, 1, 2);
        seed.set_row(0, v);
        FMat cl = submodule_closure(M, seed);
        if (cl.rows() == 1) lines.insert(cl.row(0));
    }

    SpTrivSplit out;
    out.n_onedim_submodules = static_cast<int>(lines.size());
    if (lines.empty()) raise(ErrKind::NotStable, "no 1-dimensional submodule found in M(0,1)");
    FMat sub(h.F, 1, 2);
    sub.set_row(0, *lines.begin());
    out.sub_basis = sub;
    out.sub = presalg::restrict_to(M, sub);
    out.quot = presalg::quotient_module(M, sub);
    out.sub_tns = out.sub.action[h.gen_Tns()].at(0, 0);
    out.sub_tpi = out.sub.action[h.gen_TPi()].at(0, 0);
    out.quot_tns = out.quot.action[h.gen_Tns()].at(0, 0);
    out.quot_tpi = out.quot.action[h.gen_TPi()].at(0, 0);
    return out;
}

std::vector<TorusCharacter> torus_isotype(const HeckeCtx& h, const AlgebraModule& M) {
    std::vector<TorusCharacter> res;
    int total = 0;
    for (size_t i = 0; i < h.chars.size(); ++i) {
        int r = rank(M.action[3 + i]);
        total += r;
        for (int k = 0; k < r; ++k) res.push_back(h.chars[i]);
    }
    if (total != M.dim)
        raise(ErrKind::ContextMismatch, "idempotent ranks do not fill the module");
    std::sort(res.begin(), res.end());
    return res;
}

std::string PiSpec::str(int p) const {
    auto twist = [&](const std::string& base) {
        std::string e = eta.str(p);
        return e == "1" ? base : base + "*" + e;
    };
    switch (kind) {
        case Kind::Trivial: return twist("1");
        case Kind::Steinberg: return twist("Sp");
        case Kind::Principal:
            return "pi(" + std::to_string(r) + "," + std::to_string(lambda) + "," + eta.str(p) + ")";
        case Kind::Supersingular:
            return "ss(" + std::to_string(r) + "," + eta.str(p) + ")";
    }
    return "?";
}

std::pair<int, felt> pi_central_char(const FieldPtr& F, const PiSpec& pi) {
    switch (pi.kind) {
        case PiSpec::Kind::Trivial:
        case PiSpec::Kind::Steinberg:
            return central_char(F, 0, pi.eta);
        case PiSpec::Kind::Principal:
        case PiSpec::Kind::Supersingular:
            return central_char(F, pi.r, pi.eta);
    }
    raise(ErrKind::UnknownPiSpec, "pi_central_char");
}

AlgebraModule shadow(const HeckeCtx& h, const PiSpec& pi) {
    const FieldCtx& F = *h.F;
    const int p = h.p();
    switch (pi.kind) {
        case PiSpec::Kind::Trivial: {
            TorusCharacter chi(p - 1, pi.eta.u, pi.eta.u);
            felt c_pi = F.inv(F.mul(eval_unit(h, pi.eta, -1), pi.eta.vp));
            return module_char(h, chi, 0, c_pi);
        }
        case PiSpec::Kind::Steinberg: {
            TorusCharacter chi(p - 1, pi.eta.u, pi.eta.u);
            felt c_pi = F.neg(F.inv(F.mul(eval_unit(h, pi.eta, -1), pi.eta.vp)));
            return module_char(h, chi, F.neg(1), c_pi);
        }
        case PiSpec::Kind::Principal:
            return module_M(h, pi.r, pi.lambda, pi.eta);
        case PiSpec::Kind::Supersingular:
            return module_M(h, pi.r, 0, pi.eta);
    }
    raise(ErrKind::UnknownPiSpec, "shadow");
}

AlgebraModule r1_module(const HeckeCtx& h, const PiSpec& pi) {
    const int p = h.p();
    const FieldCtx& F = *h.F;
    switch (pi.kind) {
        case PiSpec::Kind::Supersingular: {
            if (p == 3 && pi.r == 1)
                raise(ErrKind::ExcludedCase, "(p, r) = (3, 1) has no pinned derived shadow");
            AlgebraModule M = shadow(h, pi);
            return presalg::direct_sum(M, M);
        }
        case PiSpec::Kind::Trivial: {
            SmoothChar tw{pi.eta.u + 1, pi.eta.vp};
            return module_M(h, p - 3, 1, tw);
        }
        case PiSpec::Kind::Steinberg:
            return module_M(h, p - 1, 1, pi.eta);
        case PiSpec::Kind::Principal: {
            int s = ((p - 3 - pi.r) % (p - 1) + (p - 1)) % (p - 1);
            SmoothChar tw{pi.eta.u + pi.r + 1, pi.eta.vp};
            AlgebraModule self = module_M(h, pi.r, pi.lambda, pi.eta);
            AlgebraModule partner = module_M(h, s, F.inv(pi.lambda), tw);
            if (!presalg::is_isomorphic(self, partner).isomorphic)
                return presalg::direct_sum(self, partner);
            // Degenerate partner (r = p-2, lambda = +-1): the two halves
            // glue into the unique non-split self-extension; a direct sum
            // would overcount the self maps by one.
            presalg::Ext1Result e = presalg::ext1(self, self);
            if (e.dim < 1)
                raise(ErrKind::NotStable, "no self-extension available for the glued shadow");
            return presalg::middle_module(self, self, e.representatives.row(0));
        }
    }
    raise(ErrKind::UnknownPiSpec, "r1_module");
}

} // namespace modp::hecke
