#ifndef RECON_PARITY_CHECK_CODE_HPP
#define RECON_PARITY_CHECK_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "recon/bitstring.hpp"
#include "recon/rational.hpp"

namespace recon {

enum class RankCheck { verify, skip };

/// Sparse binary parity-check matrix with both Tanner-graph views.
///
/// k = n - m_rows under the full-row-rank convention: every syndrome
/// value names a distinct coset, so the code carries exactly n - m_rows
/// information symbols. load_alist verifies the rank by GF(2) elimination
/// unless told to skip; generated codes are not rank-checked (regular
/// codes with even column degree can never be full rank).
///
/// Immutable after construction and safe to share across concurrent
/// decoders.
class ParityCheckCode {
public:
    /// Builds from per-row column indices. Indices are validated, sorted
    /// and checked for duplicates; the column view is derived.
    ParityCheckCode(std::size_t n, std::vector<std::vector<std::uint32_t>> rows,
                    RankCheck check = RankCheck::skip);

    std::size_t length() const { return n_; }
    std::size_t rows() const { return row_adj_.size(); }
    std::size_t dimension() const { return n_ - row_adj_.size(); }   // k
    Rational base_rate() const {                                     // R0 = k/n
        return Rational(static_cast<std::int64_t>(dimension()),
                        static_cast<std::int64_t>(n_));
    }

    const std::vector<std::vector<std::uint32_t>>& row_adjacency() const { return row_adj_; }
    const std::vector<std::vector<std::uint32_t>>& column_adjacency() const { return col_adj_; }

    std::size_t edge_count() const { return edge_col_.size(); }

    // Flattened edge layout for the decoder: edges are numbered row by
    // row; edge_col_[e] is the variable of edge e, and rows/columns own
    // contiguous/indexed slices of the edge array.
    const std::vector<std::uint32_t>& row_offsets() const { return row_off_; }
    const std::vector<std::uint32_t>& edge_columns() const { return edge_col_; }
    const std::vector<std::uint32_t>& column_offsets() const { return col_off_; }
    const std::vector<std::uint32_t>& column_edges() const { return col_edge_; }

    /// 64-bit FNV-1a over (n, m_rows, row adjacency); names the code in
    /// plan records so both parties can confirm they use the same matrix.
    std::uint64_t fingerprint() const;

private:
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> row_adj_;
    std::vector<std::vector<std::uint32_t>> col_adj_;
    std::vector<std::uint32_t> row_off_, edge_col_, col_off_, col_edge_;
};

/// m(x) = H x^T over GF(2); length equals the number of parity rows.
BitString syndrome(const ParityCheckCode& code, const BitString& x);

/// True iff the parity rows are linearly independent over GF(2).
bool has_full_row_rank(const ParityCheckCode& code);

/// Reads the alist sparse-matrix format. Throws ParseError naming the
/// line on malformed counts, out-of-range or duplicate indices, or
/// degree/entry mismatches.
ParityCheckCode load_alist(std::istream& in, RankCheck check = RankCheck::verify);

/// Canonical alist output: space-separated, zero-padded rows, LF endings.
void write_alist(const ParityCheckCode& code, std::ostream& out);

/// Regular Gallager-style construction by random permutation of edge
/// sockets, with bounded swap repair of duplicate edges. Deterministic
/// for a fixed seed.
ParityCheckCode generate_gallager(std::size_t n, unsigned col_degree,
                                  unsigned row_degree, std::uint64_t seed);

} // namespace recon

#endif // RECON_PARITY_CHECK_CODE_HPP
