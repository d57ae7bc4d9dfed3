#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bfpower {

// Empty cell, integer, real or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

class Dataset {
 public:
  Dataset() = default;

  explicit Dataset(std::vector<std::string> columns) : columns_(std::move(columns)) {
    std::set<std::string> seen;
    for (const auto& c : columns_) {
      if (c.empty()) throw std::invalid_argument("dataset column names must be non-empty");
      if (!seen.insert(c).second) {
        throw std::invalid_argument("duplicate dataset column '" + c + "'");
      }
    }
  }

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) {
      throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, expected " +
                                  std::to_string(columns_.size()));
    }
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  std::size_t column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i] == name) return i;
    }
    throw std::out_of_range("no column '" + name + "'");
  }

  const Cell& at(std::size_t row, const std::string& column) const {
    return rows_.at(row).at(column_index(column));
  }

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace bfpower
