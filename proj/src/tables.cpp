#include "bzeta/tables.hpp"

namespace bzeta {

namespace {
const BigInt kZero(0);
}

StirlingTable::StirlingTable(int max_row) : max_row_(max_row) {
    if (max_row < 1)
        throw std::invalid_argument("StirlingTable: max_row must be >= 1");
    rows_.reserve(static_cast<size_t>(max_row));
    rows_.push_back({BigInt(1)});  // S(1,1)
    for (int r = 2; r <= max_row; ++r) {
        const auto& prev = rows_.back();
        std::vector<BigInt> row(static_cast<size_t>(r));
        row[0] = 1;      // S(r,1)
        row[r - 1] = 1;  // S(r,r)
        for (int k = 2; k < r; ++k)
            row[k - 1] = k * prev[k - 1] + prev[k - 2];
        rows_.push_back(std::move(row));
    }
}

const BigInt& StirlingTable::operator()(int r, int k) const {
    if (r < 1 || r > max_row_)
        throw std::out_of_range("StirlingTable: row " + std::to_string(r) + " not built");
    if (k < 1 || k > r)
        return kZero;
    return rows_[static_cast<size_t>(r - 1)][static_cast<size_t>(k - 1)];
}

EulerianTable::EulerianTable(int max_row) : max_row_(max_row) {
    if (max_row < 1)
        throw std::invalid_argument("EulerianTable: max_row must be >= 1");
    rows_.reserve(static_cast<size_t>(max_row));
    rows_.push_back({BigInt(1)});  // <1,0>
    for (int r = 2; r <= max_row; ++r) {
        const auto& prev = rows_.back();
        std::vector<BigInt> row(static_cast<size_t>(r));
        row[0] = 1;  // <r,0>
        for (int j = 1; j < r; ++j) {
            BigInt v = (r - j) * prev[static_cast<size_t>(j - 1)];
            if (j < r - 1)
                v += (j + 1) * prev[static_cast<size_t>(j)];
            row[static_cast<size_t>(j)] = std::move(v);
        }
        rows_.push_back(std::move(row));
    }
}

const BigInt& EulerianTable::operator()(int r, int j) const {
    if (r < 1 || r > max_row_)
        throw std::out_of_range("EulerianTable: row " + std::to_string(r) + " not built");
    if (j < 0 || j > r - 1)
        return kZero;
    return rows_[static_cast<size_t>(r - 1)][static_cast<size_t>(j)];
}

}  // namespace bzeta
