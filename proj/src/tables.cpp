#include "modp/tables.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "modp/envelope.hpp"
#include "modp/pgroup.hpp"
#include "modp/presalg.hpp"
#include "modp/symr.hpp"

#include "json.hpp"

namespace modp::tables {

using hecke::HeckeCtx;
using hecke::PiSpec;
using hecke::SmoothChar;
using hecke::TorusCharacter;
using presalg::AlgebraModule;

namespace {

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    int workers = std::min(jobs, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

std::string ss_name(int r) { return "ss(" + std::to_string(r) + ",1)"; }

} // namespace

Table ext_table(const FieldPtr& F, const std::string& kind, int jobs) {
    const int p = F->p();
    Table t;
    t.name = "hecke-" + kind;
    t.p = p;
    t.k = F->k();
    t.argv = {"hecke", "table", "--p", std::to_string(p), "--kind", kind};

    if (kind == "extH") {
        for (int r = 0; r <= p - 1; ++r) {
            HeckeCtx h = hecke::make_hecke_ctx(F, r, 1);
            AlgebraModule M = hecke::module_M(h, r, 0, SmoothChar::trivial());
            TRow row;
            row.left = row.right = ss_name(r);
            row.hom = presalg::hom_dim(M, M);
            row.ext1 = presalg::ext1(M, M).dim;
            t.rows.push_back(std::move(row));
        }
    } else if (kind == "kuku") {
        struct Item {
            int r, l1, l2;
        };
        std::vector<Item> items;
        for (int r = 1; r <= p - 2; ++r)
            for (int l1 = 1; l1 < p; ++l1)
                for (int l2 = 1; l2 < p; ++l2) items.push_back({r, l1, l2});
        std::vector<TRow> rows(items.size());
        parallel_for(static_cast<int>(items.size()), jobs, [&](int i) {
            const auto& it = items[i];
            HeckeCtx h = hecke::make_hecke_ctx(F, it.r, 1);
            AlgebraModule M = hecke::module_M(h, it.r, 0, SmoothChar::trivial());
            AlgebraModule E = hecke::module_E(h, static_cast<felt>(it.l1),
                                              static_cast<felt>(it.l2), it.r,
                                              SmoothChar::trivial());
            TRow row;
            row.left = "E(" + std::to_string(it.l1) + "," + std::to_string(it.l2) + ";" +
                       std::to_string(it.r) + ")";
            row.right = ss_name(it.r);
            row.hom = presalg::hom_dim(E, M);
            row.ext1 = presalg::ext1(E, M).dim;
            rows[i] = std::move(row);
        });
        t.rows = std::move(rows);
    } else if (kind == "sp-triv") {
        HeckeCtx h = hecke::make_hecke_ctx(F, 0, 1);
        hecke::SpTrivSplit split = hecke::sp_triv_split(h);
        TRow srow;
        srow.left = "M(0,1,1)";
        srow.right = "split";
        srow.hom = split.n_onedim_submodules;
        srow.extras = {{"sub_tns", split.sub_tns},
                       {"sub_tpi", split.sub_tpi},
                       {"quot_tns", split.quot_tns},
                       {"quot_tpi", split.quot_tpi}};
        t.rows.push_back(std::move(srow));

        AlgebraModule one = hecke::shadow(h, PiSpec::trivial());
        AlgebraModule sp = hecke::shadow(h, PiSpec::steinberg());
        const AlgebraModule* mods[2] = {&one, &sp};
        const char* names[2] = {"I(1)", "I(Sp)"};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                TRow row;
                row.left = names[a];
                row.right = names[b];
                row.hom = presalg::hom_dim(*mods[a], *mods[b]);
                row.ext1 = presalg::ext1(*mods[a], *mods[b]).dim;
                t.rows.push_back(std::move(row));
            }
    } else if (kind == "stex-split") {
        struct Item {
            int r, l1, l2;
        };
        std::vector<Item> items;
        for (int r = 1; r <= p - 2; ++r)
            for (int l1 = 0; l1 < p; ++l1)
                for (int l2 = 0; l2 < p; ++l2) items.push_back({r, l1, l2});
        std::vector<TRow> rows(items.size());
        parallel_for(static_cast<int>(items.size()), jobs, [&](int i) {
            const auto& it = items[i];
            HeckeCtx h = hecke::make_hecke_ctx(F, it.r, 1);
            AlgebraModule M = hecke::module_M(h, it.r, 0, SmoothChar::trivial());
            AlgebraModule MM = presalg::direct_sum(M, M);
            AlgebraModule E = hecke::module_E(h, static_cast<felt>(it.l1),
                                              static_cast<felt>(it.l2), it.r,
                                              SmoothChar::trivial());
            bool split_iso = presalg::is_isomorphic(E, MM).isomorphic;
            FMat sub(F, 2, 4);
            sub.at(0, 0) = 1;
            sub.at(1, 1) = 1;
            int class_rank = presalg::extension_class_rank(E, sub);
            if (split_iso != (class_rank == 0))
                raise(ErrKind::NotStable, "split test and cocycle class disagree");
            TRow row;
            row.left = "E(" + std::to_string(it.l1) + "," + std::to_string(it.l2) + ";" +
                       std::to_string(it.r) + ")";
            row.right = ss_name(it.r) + "+" + ss_name(it.r);
            row.hom = presalg::hom_dim(E, MM);
            row.ext1 = class_rank;
            row.extras = {{"split", split_iso ? 1 : 0}};
            rows[i] = std::move(row);
        });
        t.rows = std::move(rows);
    } else if (kind == "rst-isotype") {
        HeckeCtx h = hecke::make_hecke_ctx(F, 0, 1);
        struct Item {
            std::string name;
            AlgebraModule mod;
        };
        std::vector<Item> mods;
        mods.push_back({"M(" + std::to_string(p - 1) + ",1,1)",
                        hecke::module_M(h, p - 1, 1, SmoothChar::trivial())});
        mods.push_back({"M(" + std::to_string(p - 3) + ",1,w)",
                        hecke::module_M(h, p - 3, 1, SmoothChar::omega())});
        for (const auto& it : mods) {
            auto iso = hecke::torus_isotype(h, it.mod);
            for (size_t i = 0; i < iso.size();) {
                size_t j = i;
                while (j < iso.size() && iso[j] == iso[i]) ++j;
                TRow row;
                row.left = it.name;
                row.right = iso[i].str();
                row.hom = static_cast<long long>(j - i);
                t.rows.push_back(std::move(row));
                i = j;
            }
        }
    } else {
        raise(ErrKind::UnknownKind, "unknown table kind " + kind);
    }
    return t;
}

namespace {

std::vector<PiSpec> parse_pi_token(const FieldPtr& F, const std::string& token) {
    const int p = F->p();
    auto strip = [](std::string s) {
        std::string out;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) out += c;
        return out;
    };
    std::string s = strip(token);
    if (s == "trivial") return {PiSpec::trivial()};
    if (s == "steinberg") return {PiSpec::steinberg()};
    if (s == "supersingular") {
        std::vector<PiSpec> out;
        for (int r = 0; r <= p - 1; ++r) {
            if (p == 3 && r == 1) continue; // excluded case
            out.push_back(PiSpec::supersingular(r));
        }
        return out;
    }
    if (s == "principal") {
        std::vector<PiSpec> out;
        for (int r = 1; r <= p - 1; ++r)
            for (int l = 1; l < p; ++l) {
                if (r == p - 1 && (l == 1 || l == p - 1)) continue; // reducible
                out.push_back(PiSpec::principal(r, static_cast<felt>(l)));
            }
        return out;
    }
    auto args_of = [&](const std::string& head) -> std::optional<std::string> {
        if (s.rfind(head + "(", 0) == 0 && s.back() == ')')
            return s.substr(head.size() + 1, s.size() - head.size() - 2);
        return std::nullopt;
    };
    if (auto a = args_of("supersingular")) {
        int r = std::stoi(*a);
        if (r < 0 || r > p - 1) raise(ErrKind::RangeError, "supersingular r out of range");
        return {PiSpec::supersingular(r)};
    }
    if (auto a = args_of("principal")) {
        auto comma = a->find(',');
        if (comma == std::string::npos)
            raise(ErrKind::ParseError, "principal(r,lambda) expects two arguments");
        int r = std::stoi(a->substr(0, comma));
        long long l = std::stoll(a->substr(comma + 1));
        felt lam = F->from_int(l);
        if (lam == 0) raise(ErrKind::RangeError, "principal series needs lambda != 0");
        if (r < 0 || r > p - 1) raise(ErrKind::RangeError, "principal r out of range");
        bool pm1 = lam == 1 || lam == F->neg(1);
        if (pm1 && (r == 0 || r == p - 1))
            raise(ErrKind::RangeError, "pi(r,lambda) is reducible at (0,+-1), (p-1,+-1)");
        return {PiSpec::principal(r, lam)};
    }
    raise(ErrKind::UnknownPiSpec, "unknown pi spec " + token);
}

} // namespace

Table classify_table(const FieldPtr& F, const std::string& pi_spec_token, int jobs) {
    const int p = F->p();
    std::vector<PiSpec> specs = parse_pi_token(F, pi_spec_token);
    Table t;
    t.name = "classify-" + pi_spec_token;
    t.p = p;
    t.k = F->k();
    t.argv = {"classify", "--p", std::to_string(p), "--pi", pi_spec_token};

    std::vector<std::vector<TRow>> sections(specs.size());
    parallel_for(static_cast<int>(specs.size()), jobs, [&](int i) {
        const PiSpec& pi = specs[i];
        auto rows = ledger::classification_table(F, pi);
        for (const auto& r : rows) {
            TRow row;
            row.left = r.tau;
            row.right = pi.str(p);
            row.hom = r.hom_part;
            row.ext1 = r.ext_part;
            row.provenance = r.provenance;
            row.extras = {{"d", r.d}};
            row.flags = r.flags;
            sections[i].push_back(std::move(row));
        }
    });
    for (auto& sec : sections)
        for (auto& row : sec) t.rows.push_back(std::move(row));
    return t;
}

Table pgroup_table(int p, int level, const std::string& selector, bool eigen) {
    pgroup::Selector sel = pgroup::selector_from(selector);
    pgroup::FinitePGroup G = pgroup::group_build(p, level, sel);
    Table t;
    t.name = eigen ? "pgroup-eigenchars" : "pgroup-hom";
    t.p = p;
    t.argv = {"pgroup", eigen ? "eigenchars" : "hom", "--p", std::to_string(p),
              "--level", std::to_string(level), "--group", selector};
    if (eigen) {
        auto chars = pgroup::eigenchars(G);
        for (size_t i = 0; i < chars.size();) {
            size_t j = i;
            while (j < chars.size() && chars[j] == chars[i]) ++j;
            TRow row;
            row.left = selector;
            row.right = chars[i].str();
            row.hom = static_cast<long long>(j - i);
            t.rows.push_back(std::move(row));
            i = j;
        }
    } else {
        pgroup::HomFp H = pgroup::hom_fp(G);
        TRow row;
        row.left = selector;
        row.right = "Hom(G,F_p)";
        row.hom = H.dim;
        row.extras = {{"order", static_cast<long long>(G.elems.size())}};
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table envelope_socle_table(const FieldPtr& F, const TorusCharacter& chi, int m) {
    envelope::EnvelopeModule J = envelope::envelope_make(F, chi, m);
    auto series = envelope::socle_series(J);
    TorusCharacter alpha = hecke::alpha_char(F->p());
    Table t;
    t.name = "envelope-socle";
    t.p = F->p();
    t.argv = {"envelope", "socle", "--p", std::to_string(F->p()), "--chi",
              std::to_string(chi.m) + "," + std::to_string(chi.n), "--m", std::to_string(m)};
    for (size_t k = 0; k < series.size(); ++k) {
        TorusCharacter expect = chi * alpha.pow(-static_cast<int>(k));
        TRow row;
        row.left = "soc_" + std::to_string(k + 1) + "/soc_" + std::to_string(k);
        row.right = series[k].str();
        row.hom = 1;
        row.extras = {{"k", static_cast<long long>(k)},
                      {"pass", series[k] == expect ? 1 : 0}};
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table envelope_minj_table(const FieldPtr& F, int r, int n) {
    const int p = F->p();
    Table t;
    t.name = "envelope-minj";
    t.p = p;
    t.argv = {"envelope", "minj", "--p", std::to_string(p), "--r", std::to_string(r),
              "--n", std::to_string(n)};
    for (int i = 0; i <= n; ++i) {
        auto [e, lambda] = envelope::minj_recursion(F, r, i);
        TRow row;
        row.left = "minj(" + std::to_string(i) + ")";
        row.right = "(e_n, lambda_n)";
        row.hom = e;
        row.ext1 = lambda;
        t.rows.push_back(std::move(row));
    }
    if (p * p <= 343) {
        envelope::EnvelopeModule J =
            envelope::envelope_make(F, TorusCharacter(p - 1, r, 0), 2);
        for (int i = 0; i <= n; ++i) {
            auto [e, lambda] = envelope::minj_recursion(F, r, i);
            (void)lambda;
            if (e >= J.dim) continue;
            TRow row;
            row.left = "identity(" + std::to_string(i) + ")";
            row.right = "lambda_n X^(e_n)";
            row.hom = e;
            row.extras = {{"pass", envelope::minj_identity_check(J, r, i) ? 1 : 0}};
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

Table verify_symr_table(const FieldPtr& F, int r, int a, bool relations_only) {
    const int p = F->p();
    Table t;
    t.name = relations_only ? "verify-relations" : "verify-symr";
    t.p = p;
    t.argv = {"verify", relations_only ? "relations" : "symr", "--p", std::to_string(p)};
    if (r >= 0) {
        t.argv.push_back("--r");
        t.argv.push_back(std::to_string(r));
    }
    if (a >= 0) {
        t.argv.push_back("--a");
        t.argv.push_back(std::to_string(a));
    }

    auto push = [&](const std::string& check, int rr, int aa, bool pass) {
        TRow row;
        row.left = check;
        row.right = "(r,a)=(" + std::to_string(rr) + "," + std::to_string(aa) + ")";
        row.extras = {{"r", rr}, {"a", aa}, {"pass", pass ? 1 : 0}};
        t.rows.push_back(std::move(row));
    };

    for (int rr = (r >= 0 ? r : 0); rr <= (r >= 0 ? r : p - 1); ++rr)
        for (int aa = (a >= 0 ? a : 0); aa <= (a >= 0 ? a : p - 2); ++aa) {
            symr::RelationsReport rep = symr::verify_relations(F, p, rr, aa);
            push("rel", rr, aa, rep.rel);
            push("trel", rr, aa, rep.trel);
            push("relX", rr, aa, rep.relX);
            if (relations_only) continue;

            bool calcsym = true;
            for (int j = 0; j <= rr && calcsym; ++j) {
                try {
                    symr::f_sum(F, p, rr, aa, j);
                } catch (const Error&) {
                    calcsym = false;
                }
            }
            push("calcsym", rr, aa, calcsym);
            push("calcsym2", rr, aa, symr::verify_calcsym2(F, p, rr, aa));
            if (rr != 0) push("calc1", rr, aa, symr::w_sigma_check(F, p, rr, aa));
        }
    return t;
}

Table ledger_table(const FieldPtr& F, int r) {
    const int p = F->p();
    ledger::DimLedger L = ledger::main_theorem_assembly(F, r);
    Table t;
    t.name = "ledger-main-theorem";
    t.p = p;
    t.argv = {"ledger", "main-theorem", "--p", std::to_string(p), "--r", std::to_string(r)};
    for (const auto& e : L.entries) {
        TRow row;
        row.left = e.name;
        row.right = e.note;
        row.hom = e.value;
        row.provenance = ledger::provenance_name(e.prov);
        t.rows.push_back(std::move(row));
    }
    auto bad = L.check_all();
    for (const auto& c : L.constraints) {
        TRow row;
        row.left = "constraint";
        row.right = c.name;
        row.extras = {{"pass",
                       std::find(bad.begin(), bad.end(), c.name) == bad.end() ? 1 : 0}};
        t.rows.push_back(std::move(row));
    }
    ledger::AdjointDims ad = ledger::adjoint_dims(p, r);
    TRow row;
    row.left = "adjoint";
    row.right = ad.excluded ? "excluded" : "h0,h2,h1(Ad),h1(Ad0)";
    if (!ad.excluded)
        row.extras = {{"h0", ad.h0}, {"h2", ad.h2}, {"h1_ad", ad.h1_ad}, {"h1_ad0", ad.h1_ad0}};
    row.provenance = "mixed";
    t.rows.push_back(std::move(row));
    return t;
}

std::string render_json(const Table& t) {
    nlohmann::json j;
    j["meta"]["name"] = t.name;
    j["meta"]["p"] = t.p;
    j["meta"]["field"] = {{"p", t.p}, {"k", t.k}};
    j["meta"]["version"] = 1;
    j["meta"]["argv"] = t.argv;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json row;
        row["left"] = r.left;
        row["right"] = r.right;
        row["hom"] = r.hom;
        row["ext1"] = r.ext1;
        row["provenance"] = r.provenance;
        for (const auto& [k, v] : r.extras) row[k] = v;
        if (!r.flags.empty()) row["flags"] = r.flags;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

} // namespace

std::string render_csv(const Table& t) {
    std::string out = "left,right,hom,ext1,provenance\n";
    for (const auto& r : t.rows)
        out += csv_field(r.left) + "," + csv_field(r.right) + "," + std::to_string(r.hom) + "," +
               std::to_string(r.ext1) + "," + r.provenance + "\n";
    return out;
}

std::string render_md(const Table& t) {
    std::string out =
        "| left | right | hom | ext1 | provenance | extras |\n|---|---|---|---|---|---|\n";
    for (const auto& r : t.rows) {
        std::string extras;
        for (const auto& [k, v] : r.extras)
            extras += (extras.empty() ? "" : " ") + k + "=" + std::to_string(v);
        for (const auto& f : r.flags) extras += (extras.empty() ? "" : " ") + f;
        out += "| " + r.left + " | " + r.right + " | " + std::to_string(r.hom) + " | " +
               std::to_string(r.ext1) + " | " + r.provenance + " | " + extras + " |\n";
    }
    return out;
}

std::string render(const Table& t, const std::string& format) {
    if (format == "json") return render_json(t);
    if (format == "csv") return render_csv(t);
    if (format == "md") return render_md(t);
    raise(ErrKind::UnknownKind, "unknown format " + format);
}

bool all_checks_pass(const Table& t) {
    for (const auto& r : t.rows)
        for (const auto& [k, v] : r.extras)
            if (k == "pass" && v != 1) return false;
    return true;
}

} // namespace modp::tables
