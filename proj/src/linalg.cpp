#include "kakeya/linalg.hpp"

namespace kakeya {

int rref(const Field& f, Mat& m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Fel s = f.inv(m.at(r, c));
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Fel t = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

int rank(const Field& f, Mat m) { return rref(f, m); }

std::vector<std::vector<Fel>> nullspace(const Field& f, Mat m) {
    int rk = rref(f, m);
    // Locate the pivot column of each of the rk leading rows.
    std::vector<int> pivot_col(rk, -1);
    std::vector<bool> is_pivot(std::size_t(m.cols), false);
    for (int i = 0, c = 0; i < rk; ++i) {
        while (c < m.cols && m.at(i, c) == 0) ++c;
        pivot_col[i] = c;
        is_pivot[std::size_t(c)] = true;
    }
    std::vector<std::vector<Fel>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[std::size_t(free)]) continue;
        std::vector<Fel> v(std::size_t(m.cols), 0);
        v[std::size_t(free)] = 1;
        for (int i = 0; i < rk; ++i)
            v[std::size_t(pivot_col[i])] = f.neg(m.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace kakeya
