// Batch front-end: module expressions, verification suites, tables,
// deterministic JSON/CSV/markdown output, golden-file comparison.
//
// Exit codes: 0 all checks pass, 1 usage or parse error, 2 a mathematical
// verification failed (machine-readable diff on stderr).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "modp/exprparse.hpp"
#include "modp/tables.hpp"

namespace fs = std::filesystem;
using namespace modp;

namespace {

struct Invocation {
    std::string format = "json";
    int jobs = 1;
};

int run(const std::vector<std::string>& args, std::string& out, std::string& err);

// The frozen golden set: every table the acceptance tables cover.
std::vector<std::pair<std::string, std::vector<std::string>>> golden_manifest() {
    std::vector<std::pair<std::string, std::vector<std::string>>> m;
    auto add = [&](const std::string& file, std::vector<std::string> argv) {
        argv.push_back("--format");
        argv.push_back("json");
        m.emplace_back(file, std::move(argv));
    };
    for (int p : {3, 5, 7}) {
        std::string ps = std::to_string(p);
        add("hecke_extH_p" + ps + ".json", {"hecke", "table", "--p", ps, "--kind", "extH"});
        add("hecke_sptriv_p" + ps + ".json", {"hecke", "table", "--p", ps, "--kind", "sp-triv"});
    }
    for (int p : {5, 7}) {
        std::string ps = std::to_string(p);
        add("hecke_kuku_p" + ps + ".json", {"hecke", "table", "--p", ps, "--kind", "kuku"});
        add("hecke_stex_p" + ps + ".json", {"hecke", "table", "--p", ps, "--kind", "stex-split"});
        add("hecke_rst_p" + ps + ".json", {"hecke", "table", "--p", ps, "--kind", "rst-isotype"});
        for (const std::string pi : {"trivial", "steinberg", "principal", "supersingular"})
            add("classify_" + pi + "_p" + ps + ".json", {"classify", "--p", ps, "--pi", pi});
    }
    return m;
}

int emit_table(const tables::Table& t, const Invocation& inv, std::string& out) {
    out += tables::render(t, inv.format);
    return tables::all_checks_pass(t) ? 0 : 2;
}

std::string default_golden_dir() {
    if (const char* env = std::getenv("GOLDEN_DIR")) return env;
    return "goldens";
}

int goldens_check(const std::string& dir, std::string& out, std::string& err) {
    nlohmann::json report = nlohmann::json::array();
    bool all_ok = true;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        err += "no golden files under " + dir + "\n";
        return 1;
    }
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string expected = ss.str();
        nlohmann::json j = nlohmann::json::parse(expected);
        std::vector<std::string> argv = j["meta"]["argv"].get<std::vector<std::string>>();
        std::string sub_out, sub_err;
        int code = run(argv, sub_out, sub_err);
        bool match = code == 0 && sub_out == expected;
        nlohmann::json entry;
        entry["file"] = f.filename().string();
        entry["match"] = match;
        if (!match) {
            all_ok = false;
            entry["exit"] = code;
            // first differing line, machine readable
            std::istringstream ea(expected), eb(sub_out);
            std::string la, lb;
            int line = 0;
            while (true) {
                bool ga = static_cast<bool>(std::getline(ea, la));
                bool gb = static_cast<bool>(std::getline(eb, lb));
                ++line;
                if (!ga && !gb) break;
                if (la != lb || ga != gb) {
                    entry["first_diff_line"] = line;
                    entry["expected"] = ga ? la : "<eof>";
                    entry["actual"] = gb ? lb : "<eof>";
                    break;
                }
            }
        }
        report.push_back(std::move(entry));
    }
    out += report.dump(2) + "\n";
    if (!all_ok) err += "golden mismatch\n";
    return all_ok ? 0 : 2;
}

int goldens_write(const std::string& dir, std::string& out, std::string& err) {
    fs::create_directories(dir);
    for (const auto& [file, argv] : golden_manifest()) {
        std::string sub_out, sub_err;
        int code = run(argv, sub_out, sub_err);
        if (code != 0) {
            err += "refusing to freeze failing output for " + file + "\n" + sub_err;
            return 2;
        }
        std::ofstream of(fs::path(dir) / file, std::ios::binary);
        of << sub_out;
        out += "wrote " + (fs::path(dir) / file).string() + "\n";
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
    CLI::App app{"exact mod-p Iwahori-Hecke module workbench"};
    app.require_subcommand(1);
    Invocation inv;
    app.add_option("--format", inv.format)->check(CLI::IsMember({"json", "csv", "md"}));
    app.add_option("--jobs", inv.jobs)->check(CLI::PositiveNumber);

    auto deep_fallthrough = [](CLI::App* a, auto&& self) -> void {
        a->fallthrough();
        for (auto* sub : a->get_subcommands([](const CLI::App*) { return true; }))
            self(sub, self);
    };

    int p = 5, level = 2, mm = 1, rr = -1, aa = -1, nn = 2;
    int fk = 1;
    std::string left, right, kind, group = "I1modZ1", chi = "0,0", pi_token, dir;

    auto* verify = app.add_subcommand("verify", "polynomial-calculus verifications");
    auto* vsym = verify->add_subcommand("symr", "full symmetric-power suite");
    vsym->add_option("--p", p)->required();
    vsym->add_option("--r", rr);
    vsym->add_option("--a", aa);
    auto* vrel = verify->add_subcommand("relations", "basis relations only");
    vrel->add_option("--p", p)->required();
    vrel->add_option("--r", rr);
    vrel->add_option("--a", aa);

    auto* hk = app.add_subcommand("hecke", "Hecke module computations");
    auto* hext = hk->add_subcommand("ext", "hom and ext1 between module expressions");
    hext->add_option("--p", p)->required();
    hext->add_option("--k", fk);
    hext->add_option("--left", left)->required();
    hext->add_option("--right", right)->required();
    auto* htab = hk->add_subcommand("table", "named verification tables");
    htab->add_option("--p", p)->required();
    htab->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"extH", "kuku", "sp-triv", "stex-split", "rst-isotype"}));

    auto* pg = app.add_subcommand("pgroup", "finite congruence-level Iwahori subgroups");
    auto* pgh = pg->add_subcommand("hom", "Hom(G, F_p) dimension");
    pgh->add_option("--p", p)->required();
    pgh->add_option("--level", level);
    pgh->add_option("--group", group)->required();
    auto* pge = pg->add_subcommand("eigenchars", "torus eigencharacters on Hom(G, F_p)");
    pge->add_option("--p", p)->required();
    pge->add_option("--level", level);
    pge->add_option("--group", group)->required();

    auto* env = app.add_subcommand("envelope", "injective envelope models");
    auto* envs = env->add_subcommand("socle", "socle filtration characters");
    envs->add_option("--p", p)->required();
    envs->add_option("--chi", chi);
    envs->add_option("--m", mm);
    auto* envm = env->add_subcommand("minj", "envelope recursion data");
    envm->add_option("--p", p)->required();
    envm->add_option("--r", rr)->required();
    envm->add_option("--n", nn);

    auto* led = app.add_subcommand("ledger", "dimension bookkeeping");
    auto* ledm = led->add_subcommand("main-theorem", "self-extension assembly");
    ledm->add_option("--p", p)->required();
    ledm->add_option("--r", rr)->required();

    auto* cls = app.add_subcommand("classify", "extension classification tables");
    cls->add_option("--p", p)->required();
    cls->add_option("--pi", pi_token)->required();

    auto* gld = app.add_subcommand("goldens", "golden-file management");
    auto* gldc = gld->add_subcommand("check", "re-run and compare");
    gldc->add_option("--dir", dir);
    auto* gldw = gld->add_subcommand("write", "freeze the standard golden set");
    gldw->add_option("--dir", dir);

    deep_fallthrough(&app, deep_fallthrough);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream oss;
        oss << (e.get_exit_code() == 0 ? "" : "argument error: ") << e.what() << "\n";
        if (e.get_exit_code() == 0) {
            out += app.help();
            return 0;
        }
        err += oss.str();
        return 1;
    }

    try {
        FieldPtr F;
        auto field = [&](int prime) { return FieldCtx::make(prime, 1); };
        if (vsym->parsed() || vrel->parsed())
            return emit_table(tables::verify_symr_table(field(p), rr, aa, vrel->parsed()), inv,
                              out);
        if (hext->parsed()) {
            F = FieldCtx::make(p, fk);
            auto L = exprparse::parse_module_expr(F, left);
            auto R = exprparse::parse_module_expr(F, right);
            if (L.ctx.zeta_unit != R.ctx.zeta_unit)
                raise(ErrKind::ContextMismatch, "left and right central characters differ");
            tables::Table t;
            t.name = "hecke-ext";
            t.p = p;
            t.k = fk;
            t.argv = {"hecke", "ext", "--p", std::to_string(p), "--left", L.canonical,
                      "--right", R.canonical, "--format", "json"};
            tables::TRow row;
            row.left = L.canonical;
            row.right = R.canonical;
            row.hom = presalg::hom_dim(L.mod, R.mod);
            row.ext1 = presalg::ext1(L.mod, R.mod).dim;
            t.rows.push_back(std::move(row));
            return emit_table(t, inv, out);
        }
        if (htab->parsed()) return emit_table(tables::ext_table(field(p), kind, inv.jobs), inv, out);
        if (pgh->parsed()) return emit_table(tables::pgroup_table(p, level, group, false), inv, out);
        if (pge->parsed()) return emit_table(tables::pgroup_table(p, level, group, true), inv, out);
        if (envs->parsed()) {
            auto comma = chi.find(',');
            if (comma == std::string::npos)
                raise(ErrKind::ParseError, "--chi expects m,n");
            hecke::TorusCharacter c(p - 1, std::stoi(chi.substr(0, comma)),
                                    std::stoi(chi.substr(comma + 1)));
            return emit_table(tables::envelope_socle_table(field(p), c, mm), inv, out);
        }
        if (envm->parsed()) return emit_table(tables::envelope_minj_table(field(p), rr, nn), inv, out);
        if (ledm->parsed()) return emit_table(tables::ledger_table(field(p), rr), inv, out);
        if (cls->parsed())
            return emit_table(tables::classify_table(field(p), pi_token, inv.jobs), inv, out);
        if (gldc->parsed()) return goldens_check(dir.empty() ? default_golden_dir() : dir, out, err);
        if (gldw->parsed()) return goldens_write(dir.empty() ? default_golden_dir() : dir, out, err);
        err += "no subcommand selected\n";
        return 1;
    } catch (const Error& e) {
        nlohmann::json diag;
        diag["error"] = e.what();
        err += diag.dump() + "\n";
        switch (e.kind()) {
            case ErrKind::ParseError:
            case ErrKind::UnknownKind:
            case ErrKind::UnknownPiSpec:
            case ErrKind::RangeError:
            case ErrKind::ExcludedCase:
            case ErrKind::ContextMismatch:
            case ErrKind::NonPrime:
            case ErrKind::EvenPrimeUnsupported:
            case ErrKind::DegreeUnsupported:
            case ErrKind::TooLarge:
                return 1; // the request was out of range, nothing was verified
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        err += std::string("error: ") + e.what() + "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string out, err;
    int code = run(args, out, err);
    std::cout << out;
    std::cerr << err;
    return code;
}
