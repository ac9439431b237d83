#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "recon/errors.hpp"
#include "recon/parity_check_code.hpp"

namespace recon {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::size_t line_no() const { return line_no_; }

    std::vector<long long> next_numbers() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            std::istringstream ss(line);
            std::vector<long long> nums;
            long long v;
            while (ss >> v) nums.push_back(v);
            if (!ss.eof()) {
                std::string tok;
                ss.clear();
                ss >> tok;
                fail("unexpected token '" + tok + "'");
            }
            if (!nums.empty()) return nums;   // blank lines are skipped
        }
        ++line_no_;
        fail("unexpected end of input");
        return {};
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("alist line " + std::to_string(line_no_) + ": " + what);
    }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

} // namespace

ParityCheckCode load_alist(std::istream& in, RankCheck check) {
    LineReader r(in);

    auto sizes = r.next_numbers();
    if (sizes.size() != 2 || sizes[0] <= 0 || sizes[1] <= 0)
        r.fail("expected 'n m_rows'");
    const std::size_t n = static_cast<std::size_t>(sizes[0]);
    const std::size_t m = static_cast<std::size_t>(sizes[1]);

    auto maxima = r.next_numbers();
    if (maxima.size() != 2 || maxima[0] <= 0 || maxima[1] <= 0)
        r.fail("expected 'max_col_degree max_row_degree'");
    const std::size_t max_col = static_cast<std::size_t>(maxima[0]);
    const std::size_t max_row = static_cast<std::size_t>(maxima[1]);

    auto read_degrees = [&r](std::size_t count, std::size_t max_deg,
                             const char* what) {
        std::vector<std::size_t> deg;
        deg.reserve(count);
        while (deg.size() < count) {
            for (long long v : r.next_numbers()) {
                if (deg.size() == count) r.fail(std::string("extra ") + what + " degree");
                if (v < 0 || static_cast<std::size_t>(v) > max_deg)
                    r.fail(std::string(what) + " degree " + std::to_string(v) +
                           " exceeds declared maximum");
                deg.push_back(static_cast<std::size_t>(v));
            }
        }
        return deg;
    };

    auto col_deg = read_degrees(n, max_col, "column");
    auto row_deg = read_degrees(m, max_row, "row");

    std::size_t col_edges = 0, row_edges = 0;
    for (auto d : col_deg) col_edges += d;
    for (auto d : row_deg) row_edges += d;
    if (col_edges != row_edges)
        r.fail("column degrees sum to " + std::to_string(col_edges) +
               " but row degrees sum to " + std::to_string(row_edges));

    // Adjacency lines: the first degree entries are 1-based indices, the
    // rest must be zero padding up to the declared maximum.
    auto read_adjacency = [&r](std::size_t count, std::size_t max_deg,
                               const std::vector<std::size_t>& deg,
                               std::size_t index_limit, const char* what) {
        std::vector<std::vector<std::uint32_t>> adj(count);
        for (std::size_t i = 0; i < count; ++i) {
            auto nums = r.next_numbers();
            if (nums.size() != max_deg)
                r.fail(std::string(what) + " " + std::to_string(i + 1) + " has " +
                       std::to_string(nums.size()) + " entries, expected " +
                       std::to_string(max_deg));
            for (std::size_t j = 0; j < nums.size(); ++j) {
                long long v = nums[j];
                if (j < deg[i]) {
                    if (v == 0)
                        r.fail("zero index inside declared degree (indices are 1-based)");
                    if (v < 1 || static_cast<std::size_t>(v) > index_limit)
                        r.fail("index " + std::to_string(v) + " out of range");
                    adj[i].push_back(static_cast<std::uint32_t>(v - 1));
                } else if (v != 0) {
                    r.fail("nonzero entry " + std::to_string(v) +
                           " beyond declared degree");
                }
            }
        }
        return adj;
    };

    auto by_col = read_adjacency(n, max_col, col_deg, m, "column");
    auto by_row = read_adjacency(m, max_row, row_deg, n, "row");

    // The two views must describe the same matrix.
    std::vector<std::vector<std::uint32_t>> rows_from_cols(m);
    for (std::size_t c = 0; c < n; ++c)
        for (std::uint32_t rr : by_col[c])
            rows_from_cols[rr].push_back(static_cast<std::uint32_t>(c));
    for (std::size_t rr = 0; rr < m; ++rr) {
        auto a = rows_from_cols[rr];
        auto b = by_row[rr];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw ParseError("alist: row " + std::to_string(rr + 1) +
                             " disagrees between the column and row views");
    }

    try {
        return ParityCheckCode(n, std::move(by_row), check);
    } catch (const ConstructionError& e) {
        throw ParseError(std::string("alist: ") + e.what());
    }
}

void write_alist(const ParityCheckCode& code, std::ostream& out) {
    const auto& rows = code.row_adjacency();
    const auto& cols = code.column_adjacency();
    std::size_t max_col = 0, max_row = 0;
    for (const auto& c : cols) max_col = std::max(max_col, c.size());
    for (const auto& r : rows) max_row = std::max(max_row, r.size());

    out << code.length() << ' ' << code.rows() << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (std::size_t c = 0; c < cols.size(); ++c)
        out << cols[c].size() << (c + 1 < cols.size() ? ' ' : '\n');
    for (std::size_t r = 0; r < rows.size(); ++r)
        out << rows[r].size() << (r + 1 < rows.size() ? ' ' : '\n');

    auto write_padded = [&out](const std::vector<std::uint32_t>& entries,
                               std::size_t width) {
        for (std::size_t j = 0; j < width; ++j) {
            if (j) out << ' ';
            out << (j < entries.size() ? entries[j] + 1 : 0u);
        }
        out << '\n';
    };
    for (const auto& c : cols) write_padded(c, max_col);
    for (const auto& r : rows) write_padded(r, max_row);
}

} // namespace recon
