#include "braidhom/rank_table.hpp"

#include "braidhom/error.hpp"

namespace braidhom {

void RankTable::check(const Grade& g) const {
  if (g.size() != axes_.size()) {
    throw Error("grade has " + std::to_string(g.size()) + " coordinates, table has " +
                std::to_string(axes_.size()) + " axes");
  }
}

void RankTable::set(const Grade& g, std::size_t rank) {
  check(g);
  if (rank == 0) {
    values_.erase(g);
  } else {
    values_[g] = rank;
  }
}

void RankTable::add(const Grade& g, std::size_t rank) {
  check(g);
  if (rank != 0) values_[g] += rank;
}

std::size_t RankTable::get(const Grade& g) const {
  check(g);
  auto it = values_.find(g);
  return it == values_.end() ? 0 : it->second;
}

std::size_t RankTable::total() const {
  std::size_t t = 0;
  for (const auto& [g, r] : values_) t += r;
  return t;
}

}  // namespace braidhom
