#ifndef THINFILM_BANDED_HPP
#define THINFILM_BANDED_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "thinfilm/errors.hpp"

namespace thinfilm {

/** Pentadiagonal matrix (bandwidth 2) with in-place LU solve, no pivoting.
 *
 * Row i stores columns i-2..i+2 at offsets 0..4. The Newton systems this
 * backs are diagonally dominant for small dt; a degraded solve surfaces as a
 * failed Newton step and the caller shrinks dt.
 */
class Pentadiagonal {
  public:
    explicit Pentadiagonal(int n) : n_(n), a_(static_cast<size_t>(n) * 5, 0.0) {}

    int size() const { return n_; }
    double& at(int row, int col) { return a_[static_cast<size_t>(row) * 5 + (col - row + 2)]; }
    double at(int row, int col) const {
        return a_[static_cast<size_t>(row) * 5 + (col - row + 2)];
    }
    void clear() { std::fill(a_.begin(), a_.end(), 0.0); }

    /** Solve A x = b in place (b becomes x). Destroys the stored matrix. */
    void solve(std::vector<double>& b) {
        for (int k = 0; k < n_; ++k) {
            const double piv = at(k, k);
            if (piv == 0.0 || !std::isfinite(piv))
                throw DomainError("Pentadiagonal: zero or non-finite pivot");
            const int last_row = std::min(k + 2, n_ - 1);
            for (int i = k + 1; i <= last_row; ++i) {
                const double l = at(i, k) / piv;
                if (l == 0.0) continue;
                const int last_col = std::min(k + 2, n_ - 1);
                for (int j = k + 1; j <= last_col; ++j) at(i, j) -= l * at(k, j);
                b[i] -= l * b[k];
            }
        }
        for (int i = n_ - 1; i >= 0; --i) {
            double s = b[i];
            const int last_col = std::min(i + 2, n_ - 1);
            for (int j = i + 1; j <= last_col; ++j) s -= at(i, j) * b[j];
            b[i] = s / at(i, i);
        }
    }

  private:
    int n_;
    std::vector<double> a_;
};

} // namespace thinfilm

#endif
