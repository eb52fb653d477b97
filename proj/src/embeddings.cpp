#include "sentiline/embeddings.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "sentiline/error.hpp"
#include "sentiline/svd.hpp"
#include "sentiline/text.hpp"

namespace sentiline {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t b = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > b) out.push_back(line.substr(b, i - b));
    }
    return out;
}

bool parse_double(const std::string& s, double& out) {
    errno = 0;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && errno == 0;
}

bool is_uint(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

void add_row(EmbeddingTable& t, const std::vector<std::string>& fields, std::size_t lineno) {
    const std::string& token = fields[0];
    if (static_cast<int>(fields.size()) - 1 != t.dim) {
        throw Error::input("embedding row has " + std::to_string(fields.size() - 1) +
                           " values, expected " + std::to_string(t.dim) + " at line " +
                           std::to_string(lineno));
    }
    if (t.vocab.count(token)) {
        throw Error::input("duplicate token in embedding file: " + token);
    }
    const int idx = static_cast<int>(t.tokens.size());
    t.vocab.emplace(token, idx);
    t.tokens.push_back(token);
    for (int j = 0; j < t.dim; ++j) {
        double v;
        if (!parse_double(fields[j + 1], v)) {
            throw Error::input("bad number in embedding file at line " + std::to_string(lineno));
        }
        t.matrix.a.push_back(v);
    }
    t.matrix.rows = idx + 1;
}

} // namespace

const double* EmbeddingTable::lookup(const std::string& token) const {
    auto it = vocab.find(fold_utf8(token));
    if (it == vocab.end()) return nullptr;
    return row(it->second);
}

EmbeddingTable load_embeddings(std::istream& in) {
    EmbeddingTable t;
    std::string line;
    std::size_t lineno = 0;
    long long declared_rows = -1;

    // First line decides header vs headerless by shape.
    if (!std::getline(in, line)) throw Error::input("empty embedding file");
    ++lineno;
    auto first = split_ws(line);
    if (first.size() == 2 && is_uint(first[0]) && is_uint(first[1])) {
        declared_rows = std::atoll(first[0].c_str());
        t.dim = std::atoi(first[1].c_str());
        if (t.dim <= 0) throw Error::input("embedding dimension must be positive");
        t.matrix.cols = t.dim;
    } else {
        if (first.size() < 2) throw Error::input("embedding file: first line has no vector");
        t.dim = static_cast<int>(first.size()) - 1;
        t.matrix.cols = t.dim;
        add_row(t, first, lineno);
    }

    while (std::getline(in, line)) {
        ++lineno;
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        add_row(t, fields, lineno);
    }
    if (declared_rows >= 0 && declared_rows != t.rows()) {
        throw Error::input("embedding file declares " + std::to_string(declared_rows) +
                           " rows but contains " + std::to_string(t.rows()));
    }
    if (t.rows() == 0) throw Error::input("embedding file has no vectors");
    return t;
}

void save_embeddings(const EmbeddingTable& table, std::ostream& out) {
    out << table.rows() << " " << table.dim << "\n";
    char buf[32];
    for (int i = 0; i < table.rows(); ++i) {
        out << table.tokens[i];
        const double* r = table.row(i);
        for (int j = 0; j < table.dim; ++j) {
            std::snprintf(buf, sizeof(buf), "%.9g", r[j]);
            out << ' ' << buf;
        }
        out << '\n';
    }
}

void normalize_rows(EmbeddingTable& table) {
    for (int i = 0; i < table.rows(); ++i) {
        double* r = table.matrix.row(i);
        const double nrm = std::sqrt(dot(r, r, table.dim));
        if (nrm == 0.0) {
            throw Error::numeric("zero embedding row for token: " + table.tokens[i]);
        }
        for (int j = 0; j < table.dim; ++j) r[j] /= nrm;
    }
}

double OrthogonalMap::orthogonality_residual() const {
    const int d = w.rows;
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            double acc = 0.0;
            for (int k = 0; k < d; ++k) acc += w.at(k, i) * w.at(k, j);
            const double target = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(acc - target));
        }
    }
    return worst;
}

BilingualDictionary load_dictionary(std::istream& in) {
    BilingualDictionary d;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    while (std::getline(in, line)) {
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (fields.size() != 2) throw Error::input("dictionary line needs two tokens: " + line);
        std::pair<std::string, std::string> p(fields[0], fields[1]);
        if (seen.insert(p).second) d.pairs.push_back(std::move(p));
    }
    return d;
}

OrthogonalMap procrustes_align(const Mat& x_rows, const Mat& y_rows) {
    const int k = x_rows.rows;
    const int d = x_rows.cols;
    if (k < 1) throw Error::input("procrustes: no dictionary pairs");
    if (y_rows.rows != k || y_rows.cols != d) {
        throw Error::input("procrustes: paired matrices must have equal shape");
    }

    // M = Y^T X, entry (a, b) = sum_i y_i[a] * x_i[b]. Parallel over output
    // rows; the inner accumulation order is fixed, so the result is
    // thread-count independent.
    Mat m(d, d);
#pragma omp parallel for schedule(static)
    for (int a = 0; a < d; ++a) {
        double* mr = m.row(a);
        for (int i = 0; i < k; ++i) {
            const double ya = y_rows.at(i, a);
            const double* xi = x_rows.row(i);
            for (int b = 0; b < d; ++b) mr[b] += ya * xi[b];
        }
    }
    double mmax = 0.0;
    for (double v : m.a) mmax = std::max(mmax, std::abs(v));
    if (mmax == 0.0) throw Error::numeric("procrustes: dictionary spans nothing");

    SvdResult s = svd(m);
    OrthogonalMap map;
    map.w = Mat(d, d);
    // W = U V^T
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            double acc = 0.0;
            for (int r = 0; r < d; ++r) acc += s.u.at(i, r) * s.v.at(j, r);
            map.w.at(i, j) = acc;
        }
    }
    return map;
}

void apply_map(const OrthogonalMap& map, EmbeddingTable& table) {
    const int d = table.dim;
    if (map.w.rows != d || map.w.cols != d) {
        throw Error::input("orthogonal map dimension does not match table");
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < table.rows(); ++i) {
        double* r = table.matrix.row(i);
        Vec tmp(d);
        matvec(map.w, r, tmp.data());
        std::copy(tmp.begin(), tmp.end(), r);
    }
}

namespace {

double mean_top_k(std::vector<double>& vals, int k) {
    const int kk = std::min<int>(k, static_cast<int>(vals.size()));
    if (kk <= 0) return 0.0;
    std::partial_sort(vals.begin(), vals.begin() + kk, vals.end(), std::greater<double>());
    double acc = 0.0;
    for (int i = 0; i < kk; ++i) acc += vals[i];
    return acc / kk;
}

} // namespace

Vec csls_row_penalties(const EmbeddingTable& table, int k) {
    const int n = table.rows();
    Vec rt(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        std::vector<double> cos;
        cos.reserve(n - 1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            cos.push_back(dot(table.row(i), table.row(j), table.dim));
        }
        rt[i] = mean_top_k(cos, k);
    }
    return rt;
}

std::vector<ScoredToken> csls_neighbors(const double* query, const EmbeddingTable& table, int k) {
    if (table.rows() == 0) throw Error::input("csls: empty table");
    if (k < 1) throw Error::input("csls: k must be >= 1");

    const int n = table.rows();
    const Vec rt = csls_row_penalties(table, k);

    std::vector<double> qcos(n);
    for (int i = 0; i < n; ++i) qcos[i] = dot(query, table.row(i), table.dim);
    std::vector<double> qc = qcos;
    const double rs = mean_top_k(qc, k);

    std::vector<ScoredToken> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = {table.tokens[i], 2.0 * qcos[i] - rt[i] - rs};
    }
    std::sort(out.begin(), out.end(), [](const ScoredToken& a, const ScoredToken& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.token < b.token;
    });
    return out;
}

} // namespace sentiline
