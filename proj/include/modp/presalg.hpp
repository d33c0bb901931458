#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modp/gf.hpp"

namespace modp::presalg {

/// Word in the generators, as generator indices. Empty word = 1.
using Word = std::vector<int>;

struct Generator {
    std::string name;
    int inverse_of = -1; // index of the paired generator, -1 if none
};

/// Formal relation  sum_i coeff_i * word_i = constant * 1.
struct Relation {
    struct Term {
        felt coeff;
        Word word;
    };
    std::vector<Term> terms;
    felt constant = 0;
    std::string name;
};

class PresentedAlgebra {
public:
    PresentedAlgebra(FieldPtr f, std::vector<Generator> gens, std::vector<Relation> rels);

    const FieldPtr& field() const { return f_; }
    int ngens() const { return static_cast<int>(gens_.size()); }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Relation>& relations() const { return rels_; }
    int gen_index(const std::string& name) const; // UnknownGenerator if absent

    bool compatible(const PresentedAlgebra& o) const;

private:
    FieldPtr f_;
    std::vector<Generator> gens_;
    std::vector<Relation> rels_;
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

/// Validates generator names/relation words and the inverse pairing.
AlgebraPtr algebra_make(FieldPtr f, std::vector<Generator> gens, std::vector<Relation> rels);

/// Finite dimensional right module: generator -> matrix, rows act on the right.
struct AlgebraModule {
    AlgebraPtr alg;
    int dim = 0;
    std::vector<FMat> action; // one square matrix per generator

    const FMat& act(int g) const { return action[g]; }
};

AlgebraModule make_module(AlgebraPtr alg, std::vector<FMat> action);

/// Matrix of a word acting on the module (product in word order).
FMat word_matrix(const AlgebraModule& M, const Word& w);

/// Names of violated relations; empty means the module passes.
std::vector<std::string> module_check(const AlgebraModule& M);

/// Basis of {F : A_g F = F B_g for all g}, i.e. module maps M -> N on row
/// vectors, each returned as a dim(M) x dim(N) matrix. Deterministic.
std::vector<FMat> hom_space(const AlgebraModule& M, const AlgebraModule& N);

int hom_dim(const AlgebraModule& M, const AlgebraModule& N);

/// Ext^1 data for extensions 0 -> N -> E -> M -> 0 via block cocycles.
/// Cocycle vectors live in F^(ngens * dimM * dimN), coordinate (g, i, j)
/// at index g*dimM*dimN + i*dimN + j.
struct Ext1Result {
    int dim = 0;
    FMat cocycle_space;   // rows: basis of the cocycle space Z
    FMat coboundaries;    // rows: basis of the coboundary space B
    FMat representatives; // rows: one cocycle per Ext class basis vector
};

Ext1Result ext1(const AlgebraModule& M, const AlgebraModule& N);

/// Materializes the middle module of a cocycle: submodule coordinates
/// first (N), quotient coordinates after (M).
AlgebraModule middle_module(const AlgebraModule& M, const AlgebraModule& N,
                            const std::vector<felt>& cocycle);

/// Least action-stable subspace containing the seed rows; echelon basis.
FMat submodule_closure(const AlgebraModule& M, const FMat& seeds);

/// Restriction of the action to an action-stable row space (echelon basis).
AlgebraModule restrict_to(const AlgebraModule& M, const FMat& sub);

/// Induced action on the complement coordinates of an action-stable
/// subspace. NotStable if sub is not a submodule.
AlgebraModule quotient_module(const AlgebraModule& M, const FMat& sub);

/// Exhaustive over all q^dim - 1 seed rows; TooLarge beyond 10^6.
bool is_simple(const AlgebraModule& M);

struct IsoResult {
    bool isomorphic = false;
    std::optional<FMat> witness;
};

IsoResult is_isomorphic(const AlgebraModule& M, const AlgebraModule& N);

AlgebraModule direct_sum(const AlgebraModule& M, const AlgebraModule& N);

/// Conjugates the action by an invertible base change P (new = P G P^-1).
AlgebraModule base_change(const AlgebraModule& M, const FMat& P);

/// Extension class of E given an action-stable subspace: extracts the
/// block cocycle in an adapted basis and reduces it modulo coboundaries.
/// The result is a canonical representative, zero iff the extension
/// splits; distinct classes give distinct vectors.
std::vector<felt> extension_class(const AlgebraModule& E, const FMat& sub);

/// 0 when the extension splits, 1 otherwise.
int extension_class_rank(const AlgebraModule& E, const FMat& sub);

} // namespace modp::presalg
