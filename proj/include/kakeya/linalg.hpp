#pragma once

#include <vector>

#include "kakeya/gf.hpp"

namespace kakeya {

/// Dense row-major matrix over a finite field.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Fel> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    Fel& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    Fel at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

/// In-place reduced row echelon form; returns the rank. Pivot columns are
/// chosen left to right, so the result is the unique RREF of the row space.
int rref(const Field& f, Mat& m);

int rank(const Field& f, Mat m);

/// Basis of the right nullspace {x : m x = 0}, one vector per free column,
/// in ascending free-column order. Each basis vector has a 1 in its free
/// column, which makes the basis deterministic.
std::vector<std::vector<Fel>> nullspace(const Field& f, Mat m);

} // namespace kakeya
