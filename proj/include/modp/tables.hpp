#pragma once

#include <string>
#include <vector>

#include "modp/hecke.hpp"
#include "modp/ledger.hpp"

namespace modp::tables {

struct TRow {
    std::string left, right;
    long long hom = 0, ext1 = 0;
    std::string provenance = "computed";
    std::vector<std::pair<std::string, long long>> extras;
    std::vector<std::string> flags;
};

struct Table {
    std::string name;
    int p = 0, k = 1;
    std::vector<std::string> argv; // reproduction command, embedded in meta
    std::vector<TRow> rows;
};

/// kind in {extH, kuku, sp-triv, stex-split, rst-isotype}.
Table ext_table(const FieldPtr& F, const std::string& kind, int jobs = 1);

Table classify_table(const FieldPtr& F, const std::string& pi_spec_token, int jobs = 1);

Table pgroup_table(int p, int level, const std::string& selector, bool eigen);

Table envelope_socle_table(const FieldPtr& F, const hecke::TorusCharacter& chi, int m);
Table envelope_minj_table(const FieldPtr& F, int r, int n);

Table verify_symr_table(const FieldPtr& F, int r, int a, bool relations_only);

Table ledger_table(const FieldPtr& F, int r);

/// Deterministic serializations: sorted keys, integers only, one trailing
/// newline. The JSON form embeds the reproduction argv in meta.
std::string render_json(const Table& t);
std::string render_csv(const Table& t);
std::string render_md(const Table& t);
std::string render(const Table& t, const std::string& format);

/// True when every row encodes a passing check (pass extras all 1).
bool all_checks_pass(const Table& t);

} // namespace modp::tables
