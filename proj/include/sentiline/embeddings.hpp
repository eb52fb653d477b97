#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sentiline/lang.hpp"
#include "sentiline/matrix.hpp"

namespace sentiline {

// Immutable after load; lookups and neighbor queries are read-only and safe
// to share across threads.
struct EmbeddingTable {
    int dim = 0;
    std::vector<std::string> tokens;               // row index -> token
    std::unordered_map<std::string, int> vocab;    // token -> row index
    Mat matrix;                                    // |vocab| x dim

    int rows() const { return matrix.rows; }
    const double* row(int i) const { return matrix.row(i); }

    // Exact match on the case-folded token; nullptr = out of vocabulary.
    const double* lookup(const std::string& token) const;
};

// Text vector format: optional "N D" header line, then one token and D
// decimal values per line. Header presence is detected from the first line's
// shape. Duplicate tokens, dimension mismatches and count mismatches are
// fatal with the offending token or line number.
EmbeddingTable load_embeddings(std::istream& in);

void save_embeddings(const EmbeddingTable& table, std::ostream& out);

// L2-normalizes every row in place; a zero row is fatal.
void normalize_rows(EmbeddingTable& table);

struct OrthogonalMap {
    Mat w; // dim x dim, applied as x -> W x
    Lang source_lang = Lang::unknown;
    Lang target_lang = Lang::unknown;

    // max |W^T W - I|
    double orthogonality_residual() const;
};

struct BilingualDictionary {
    std::vector<std::pair<std::string, std::string>> pairs; // (source, target)
};

// Two whitespace-separated tokens per line; duplicates removed.
BilingualDictionary load_dictionary(std::istream& in);

// Least-squares orthogonal map W = argmin ||W x_i - y_i|| over the paired
// rows, solved as W = U V^T from the SVD of M = Y^T X.
OrthogonalMap procrustes_align(const Mat& x_rows, const Mat& y_rows);

// Applies W to every row of the table (rows treated as column vectors).
void apply_map(const OrthogonalMap& map, EmbeddingTable& table);

struct ScoredToken {
    std::string token;
    double score;
};

// Full CSLS ranking of table rows against one query. Rows must be normalized.
// CSLS(x,y) = 2 cos(x,y) - r_T(y) - r_S(x) where r_T(y) is the mean cosine of
// row y to its k nearest other rows and r_S(x) the mean cosine of the query to
// its k nearest rows. Ties break on token order.
std::vector<ScoredToken> csls_neighbors(const double* query, const EmbeddingTable& table, int k);

// The per-row neighborhood penalties r_T, exposed for reuse across queries.
Vec csls_row_penalties(const EmbeddingTable& table, int k);

} // namespace sentiline
