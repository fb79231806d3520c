#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symdet/combinat.hpp"
#include "symdet/exact.hpp"
#include "symdet/square_class.hpp"
#include "symdet/symmetrizer.hpp"

namespace symdet {

/// Element of the n-th tensor power of V = K^N in the orthonormal model,
/// stored as a sparse map from words (letters 1..N) to coefficients.
struct ConcreteTensor {
    int degree = 0;
    int dim = 0;  // N
    std::map<Word, BigRat> terms;

    static ConcreteTensor from_words(const WordSum& s, int dim);
    bool is_zero() const { return terms.empty(); }
    ConcreteTensor& operator+=(const ConcreteTensor& rhs);
    ConcreteTensor& operator*=(const BigRat& s);
    friend bool operator==(const ConcreteTensor& a, const ConcreteTensor& b) {
        return a.degree == b.degree && a.dim == b.dim && a.terms == b.terms;
    }
};

/// Tensor power of the standard form: sum of products of coefficients.
BigRat tensor_form(const ConcreteTensor& a, const ConcreteTensor& b);

/// phi_ij: inserts sum_k v_k (x) v_k at positions i < j (1-based, positions of
/// the result). Throws std::out_of_range unless 1 <= i < j <= degree + 2.
ConcreteTensor phi_insert(const ConcreteTensor& t, int i, int j);

/// pi_ij: evaluates the form in positions i < j (1-based) and drops them.
/// Throws std::out_of_range unless 1 <= i < j <= degree.
ConcreteTensor pi_contract(const ConcreteTensor& t, int i, int j);

/// An iterated insertion V^{(x) m} -> V^{(x) m+2j}. `pairs` are positions of
/// the result that receive sum_k v_k (x) v_k; the letters of the argument go
/// to `residual` in order (the remaining positions ascending when empty).
struct EmbeddingChain {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> residual;

    /// Positions the argument occupies, explicit or ascending complement.
    /// Throws std::invalid_argument unless pairs and residual tile 1..degree.
    std::vector<int> residual_positions(int degree) const;
    friend bool operator==(const EmbeddingChain&, const EmbeddingChain&) = default;
};

/// Applies the chain to a sum of words over letters 1..dim.
WordSum apply_chain(const EmbeddingChain& chain, const WordSum& x, int degree, int dim);

using RatMatrix = std::vector<std::vector<BigRat>>;
using PolyMatrix = std::vector<std::vector<IntPoly>>;

/// G_ab = (e_lambda f_a v, e_lambda f_b v) / (v, v) with
/// v = e_gamma(v_1 (x) ... (x) v_m), m = |gamma|, at ambient dimension N.
/// Throws std::invalid_argument("ambient too small") when N < |shape|.
RatMatrix constituent_gram(const Partition& shape, const Partition& gamma, const std::vector<EmbeddingChain>& chains,
                           int dim, unsigned jobs = 1);

/// Candidate chains for gamma inside shape: pairs at (1,2), (3,4), ... and
/// their shifted variants first, then one arrangement for each member of a
/// basis of e_lambda K[S_n], so the pool spans every insertion map.
std::vector<EmbeddingChain> chain_pool(const Partition& shape, int pairs);

struct RefinedConstituent {
    Partition gamma;
    int multiplicity = 0;
    std::vector<EmbeddingChain> chains;  // the m selected chains
    PolyMatrix c_matrix;                 // m x m, entries in Q[N]
    IntPoly c_det;
    SquareClassFormula c_reduced;
};

/// Empty when gamma does not occur (pooled Gram zero at two sample points).
/// Throws std::runtime_error("degree bound violated") if an entry is not a
/// polynomial of degree <= 2j.
std::optional<RefinedConstituent> constituent_poly(const Partition& shape, const Partition& gamma, unsigned jobs = 1);

struct RefinedResult {
    Partition shape;
    std::vector<RefinedConstituent> constituents;  // larger gamma first
    IntPoly dimension;                             // d(lambda, N)
    IntPoly refined_dimension;
    SquareClassFormula refined_det;  // reduced
};

/// Requires |shape| <= 7.
RefinedResult refined_decomposition(const Partition& shape, unsigned jobs = 1);

}  // namespace symdet
