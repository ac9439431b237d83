#include "recon/parity_check_code.hpp"

#include <algorithm>
#include <string>

#include "recon/errors.hpp"
#include "recon/rng.hpp"

namespace recon {

ParityCheckCode::ParityCheckCode(std::size_t n,
                                 std::vector<std::vector<std::uint32_t>> rows,
                                 RankCheck check)
    : n_(n), row_adj_(std::move(rows)) {
    if (n_ == 0) throw ConstructionError("code: length must be positive");
    const std::size_t m = row_adj_.size();
    if (m == 0 || m >= n_)
        throw ConstructionError("code: need 0 < k < n, got n=" + std::to_string(n_) +
                                " m_rows=" + std::to_string(m));

    col_adj_.assign(n_, {});
    for (std::size_t r = 0; r < m; ++r) {
        auto& row = row_adj_[r];
        std::sort(row.begin(), row.end());
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] >= n_)
                throw ConstructionError("code: column index out of range in row " +
                                        std::to_string(r));
            if (i > 0 && row[i] == row[i - 1])
                throw ConstructionError("code: duplicate entry in row " +
                                        std::to_string(r));
            col_adj_[row[i]].push_back(static_cast<std::uint32_t>(r));
        }
    }

    // Flattened views. Rows own contiguous edge ranges; columns index
    // into them.
    row_off_.reserve(m + 1);
    row_off_.push_back(0);
    for (const auto& row : row_adj_) {
        for (std::uint32_t c : row) edge_col_.push_back(c);
        row_off_.push_back(static_cast<std::uint32_t>(edge_col_.size()));
    }
    col_off_.assign(n_ + 1, 0);
    for (std::uint32_t c : edge_col_) ++col_off_[c + 1];
    for (std::size_t c = 0; c < n_; ++c) col_off_[c + 1] += col_off_[c];
    col_edge_.resize(edge_col_.size());
    {
        std::vector<std::uint32_t> cursor(col_off_.begin(), col_off_.end() - 1);
        for (std::uint32_t e = 0; e < edge_col_.size(); ++e)
            col_edge_[cursor[edge_col_[e]]++] = e;
    }

    if (check == RankCheck::verify && !has_full_row_rank(*this))
        throw ConstructionError("code: parity matrix is not full row rank");
}

std::uint64_t ParityCheckCode::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(n_);
    mix(row_adj_.size());
    for (const auto& row : row_adj_)
        for (std::uint32_t c : row) mix(c);
    return h;
}

BitString syndrome(const ParityCheckCode& code, const BitString& x) {
    if (x.size() != code.length())
        throw DimensionError("syndrome: vector length " + std::to_string(x.size()) +
                             " does not match code length " +
                             std::to_string(code.length()));
    const auto& rows = code.row_adjacency();
    BitString m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        bool acc = false;
        for (std::uint32_t c : rows[r]) acc ^= x.get(c);
        if (acc) m.set(r, true);
    }
    return m;
}

bool has_full_row_rank(const ParityCheckCode& code) {
    const std::size_t m = code.rows();
    const std::size_t n = code.length();
    const std::size_t nw = (n + 63) / 64;
    std::vector<std::uint64_t> mat(m * nw, 0);
    for (std::size_t r = 0; r < m; ++r)
        for (std::uint32_t c : code.row_adjacency()[r])
            mat[r * nw + (c >> 6)] ^= std::uint64_t{1} << (c & 63);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        const std::size_t w = col >> 6;
        const std::uint64_t mask = std::uint64_t{1} << (col & 63);
        std::size_t pivot = rank;
        while (pivot < m && !(mat[pivot * nw + w] & mask)) ++pivot;
        if (pivot == m) continue;
        if (pivot != rank)
            for (std::size_t j = w; j < nw; ++j)
                std::swap(mat[pivot * nw + j], mat[rank * nw + j]);
        for (std::size_t r = rank + 1; r < m; ++r)
            if (mat[r * nw + w] & mask)
                for (std::size_t j = w; j < nw; ++j)
                    mat[r * nw + j] ^= mat[rank * nw + j];
        ++rank;
    }
    return rank == m;
}

ParityCheckCode generate_gallager(std::size_t n, unsigned col_degree,
                                  unsigned row_degree, std::uint64_t seed) {
    if (col_degree < 2)
        throw ConstructionError("gallager: column degree must be at least 2");
    if (row_degree == 0 || (n * col_degree) % row_degree != 0)
        throw ConstructionError("gallager: n*col_degree must be divisible by row_degree");
    const std::size_t edges = n * col_degree;
    const std::size_t m = edges / row_degree;
    if (m >= n)
        throw ConstructionError("gallager: degrees give m_rows >= n");

    SplitMix64 rng(seed);
    // Socket i belongs to column i/col_degree; its position in the
    // shuffled order decides the row (slot j -> row j/row_degree).
    std::vector<std::uint32_t> perm = random_permutation(edges, rng);
    std::vector<std::uint32_t> edge_row(edges);
    for (std::size_t i = 0; i < edges; ++i)
        edge_row[i] = perm[i] / row_degree;

    auto column_of = [col_degree](std::size_t socket) {
        return static_cast<std::uint32_t>(socket / col_degree);
    };

    // Swap repair: a duplicate (column,row) pair trades its row with a
    // random other socket, preserving both degree sequences.
    const unsigned max_passes = 200;
    for (unsigned pass = 0; pass <= max_passes; ++pass) {
        std::vector<std::size_t> bad;
        {
            std::vector<std::vector<std::uint32_t>> seen(m);
            for (std::size_t i = 0; i < edges; ++i) {
                auto& cols = seen[edge_row[i]];
                std::uint32_t c = column_of(i);
                if (std::find(cols.begin(), cols.end(), c) != cols.end())
                    bad.push_back(i);
                else
                    cols.push_back(c);
            }
        }
        if (bad.empty()) break;
        if (pass == max_passes)
            throw ConstructionError("gallager: duplicate edges persist after repair");
        for (std::size_t i : bad) {
            std::size_t j = static_cast<std::size_t>(rng.next_below(edges));
            std::swap(edge_row[i], edge_row[j]);
        }
    }

    std::vector<std::vector<std::uint32_t>> rows(m);
    for (std::size_t i = 0; i < edges; ++i)
        rows[edge_row[i]].push_back(column_of(i));
    return ParityCheckCode(n, std::move(rows), RankCheck::skip);
}

} // namespace recon
