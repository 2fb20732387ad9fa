#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace braidhom {

// Graded table of ranks. Absent grades have rank 0; zero ranks are not stored.
class RankTable {
 public:
  using Grade = std::vector<int>;

  RankTable() = default;
  explicit RankTable(std::vector<std::string> axes) : axes_(std::move(axes)) {}

  const std::vector<std::string>& axes() const { return axes_; }
  void set(const Grade& g, std::size_t rank);
  void add(const Grade& g, std::size_t rank);
  std::size_t get(const Grade& g) const;
  std::size_t total() const;
  const std::map<Grade, std::size_t>& entries() const { return values_; }

  friend bool operator==(const RankTable& a, const RankTable& b) {
    return a.axes_ == b.axes_ && a.values_ == b.values_;
  }

 private:
  void check(const Grade& g) const;

  std::vector<std::string> axes_;
  std::map<Grade, std::size_t> values_;
};

}  // namespace braidhom
