#pragma once

#include <string>
#include <vector>

#include "modp/hecke.hpp"

namespace modp::ledger {

enum class Provenance { Computed, PaperCited, DerivedFormula };
const char* provenance_name(Provenance p);

struct Entry {
    std::string name;
    long long value = 0;
    Provenance prov = Provenance::Computed;
    std::string note;
};

/// sum coeff * entry = rhs, integer-exact.
struct Constraint {
    std::string name;
    std::vector<std::pair<std::string, long long>> lhs;
    long long rhs = 0;
};

struct DimLedger {
    std::vector<Entry> entries;
    std::vector<Constraint> constraints;

    void add(const std::string& name, long long value, Provenance prov,
             const std::string& note = "");
    long long get(const std::string& name) const;
    bool has(const std::string& name) const;
    void require(Constraint c);

    /// Names of violated constraints; empty when the ledger closes.
    std::vector<std::string> check_all() const;
};

/// -h0 + h1 - h2 = dim V  =>  h1 = dim V + h0 + h2.
long long euler_h1(long long dimV, long long h0, long long h2);

struct AdjointDims {
    bool excluded = false;
    long long h0 = 0, h2 = 0, h1_ad = 0, h1_ad0 = 0;
};

/// h0 = 1, h2 = 0, h1(Ad) = 5, h1(Ad0) = 3; excluded at (p, r) = (3, 1).
AdjointDims adjoint_dims(int p, int r);

/// Self-extension bookkeeping for the supersingular module at (p, r); the
/// assembled ledger closes 3 = 1 + 2 in the Iwahori case and records the
/// cited bounds 3 <= d <= 3 in the regular case, then 5 = 3 + 2 globally.
DimLedger main_theorem_assembly(const FieldPtr& F, int r);

struct ClassRow {
    std::string tau;
    bool self = false;
    long long hom_part = 0;
    long long ext_part = 0;
    long long d = 0;
    std::string provenance;
    std::vector<std::string> flags;
};

/// Candidate sweep with matching central character; rows with d > 0 only,
/// sorted with the self row first.
std::vector<ClassRow> classification_table(const FieldPtr& F, const hecke::PiSpec& pi);

} // namespace modp::ledger
