#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace weylmod {

// Finitely supported integer vector indexed by positive integers.
class ShiftVector {
 public:
  ShiftVector() = default;
  ShiftVector(std::initializer_list<std::pair<const int, std::int64_t>> init) {
    for (const auto& [i, v] : init) set(i, v);
  }
  static ShiftVector unit(int i, std::int64_t v = 1) {
    ShiftVector s;
    s.set(i, v);
    return s;
  }
  // dense values over an index list
  static ShiftVector dense(const std::vector<int>& idx, const std::vector<std::int64_t>& vals) {
    ShiftVector s;
    for (std::size_t k = 0; k < idx.size(); ++k) s.set(idx[k], vals[k]);
    return s;
  }

  std::int64_t operator[](int i) const {
    auto it = e_.find(i);
    return it == e_.end() ? 0 : it->second;
  }
  void set(int i, std::int64_t v) {
    if (v == 0) e_.erase(i);
    else e_[i] = v;
  }
  const std::map<int, std::int64_t>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }
  std::vector<int> support() const {
    std::vector<int> s;
    for (const auto& [i, v] : e_) s.push_back(i);
    return s;
  }

  ShiftVector operator-() const {
    ShiftVector r;
    for (const auto& [i, v] : e_) r.e_[i] = -v;
    return r;
  }
  friend ShiftVector operator+(const ShiftVector& a, const ShiftVector& b) {
    ShiftVector r = a;
    for (const auto& [i, v] : b.e_) r.set(i, r[i] + v);
    return r;
  }
  friend ShiftVector operator-(const ShiftVector& a, const ShiftVector& b) { return a + (-b); }
  friend bool operator==(const ShiftVector& a, const ShiftVector& b) { return a.e_ == b.e_; }
  friend bool operator!=(const ShiftVector& a, const ShiftVector& b) { return !(a == b); }
  // numeric lexicographic order over increasing indices
  friend bool operator<(const ShiftVector& a, const ShiftVector& b) {
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() || ib != b.e_.end()) {
      int i = ia == a.e_.end() ? ib->first : ib == b.e_.end() ? ia->first : std::min(ia->first, ib->first);
      std::int64_t va = (ia != a.e_.end() && ia->first == i) ? (ia++)->second : 0;
      std::int64_t vb = (ib != b.e_.end() && ib->first == i) ? (ib++)->second : 0;
      if (va != vb) return va < vb;
    }
    return false;
  }

  // "v1,v2,..." over the given indices
  std::string key(const std::vector<int>& idx) const {
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string((*this)[idx[k]]);
    return s;
  }
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [i, v] : e_) {
      s += (first ? "" : ", ") + std::to_string(i) + ":" + std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  std::map<int, std::int64_t> e_;
};

}  // namespace weylmod
