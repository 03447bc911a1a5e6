#include "altpoly/linalg.hpp"

#include <gmpxx.h>

#include "altpoly/errors.hpp"

namespace altpoly {

KernelResult rational_kernel(const std::vector<std::vector<Rational>>& rows, std::size_t ncols) {
    // Clear each row to integers (row scaling leaves the kernel unchanged).
    std::vector<std::vector<mpz_class>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != ncols) throw Error("rational_kernel: ragged row");
        mpz_class lcm_den(1);
        for (const auto& e : row) {
            mpz_class den = e.raw().get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<mpz_class> irow(ncols);
        for (std::size_t j = 0; j < ncols; ++j) {
            mpq_class scaled = row[j].raw() * mpq_class(lcm_den);
            irow[j] = scaled.get_num();  // denominator is 1 after scaling
        }
        m.push_back(std::move(irow));
    }

    // Bareiss fraction-free elimination to row-echelon form.  The division
    // by the previous pivot is exact (Sylvester identity), also under the
    // deterministic first-nonzero row interchanges used here.
    const std::size_t nrows = m.size();
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows;
    mpz_class prev(1);
    std::size_t cur = 0;
    for (std::size_t col = 0; col < ncols && cur < nrows; ++col) {
        std::size_t sel = nrows;
        for (std::size_t r = cur; r < nrows; ++r) {
            if (m[r][col] != 0) { sel = r; break; }
        }
        if (sel == nrows) continue;
        std::swap(m[cur], m[sel]);
        for (std::size_t r = cur + 1; r < nrows; ++r) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                mpz_class t = m[cur][col] * m[r][j] - m[r][col] * m[cur][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[r][j] = std::move(t);
            }
            m[r][col] = 0;
        }
        prev = m[cur][col];
        pivot_cols.push_back(col);
        pivot_rows.push_back(cur);
        ++cur;
    }

    KernelResult out;
    out.rank = pivot_cols.size();

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        // Solve with x_f = 1, all other free coordinates 0; back-substitute
        // the pivot coordinates from the echelon rows, bottom up.
        std::vector<Rational> x(ncols, Rational(0));
        x[f] = Rational(1);
        for (std::size_t i = pivot_cols.size(); i-- > 0;) {
            const std::size_t r = pivot_rows[i];
            const std::size_t p = pivot_cols[i];
            mpq_class acc(0);
            for (std::size_t j = p + 1; j < ncols; ++j) {
                if (x[j].is_zero() || m[r][j] == 0) continue;
                acc += mpq_class(m[r][j]) * x[j].raw();
            }
            x[p] = Rational::from_raw(-acc / mpq_class(m[r][p]));
        }
        // Canonical scaling: first nonzero coordinate becomes 1.
        for (std::size_t j = 0; j < ncols; ++j) {
            if (!x[j].is_zero()) {
                const Rational lead = x[j];
                for (auto& v : x) v /= lead;
                break;
            }
        }
        out.basis.push_back(std::move(x));
    }
    return out;
}

}  // namespace altpoly
