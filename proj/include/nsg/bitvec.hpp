#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nsg/kernels.hpp"

namespace nsg {

// Fixed-length dense bit table backed by the kernel layer. Bits beyond
// size() in the last word are kept zero at all times.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits, bool value = false);

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool v = true);

  // set every bit in [from, size())
  void fill_from(std::size_t from);

  // this |= (src << shift)
  void or_shifted(const BitVec& src, std::size_t shift);
  // this &= (src >> shift); requires src.size() >= size() + shift
  void and_shifted(const BitVec& src, std::size_t shift);

  // bits [from, from+len) as a fresh BitVec; requires from+len <= size()
  BitVec slice(std::size_t from, std::size_t len) const;

  std::uint64_t count() const;
  bool none() const;
  std::optional<std::size_t> find_first_set() const;
  std::optional<std::size_t> find_last_unset() const;

  // every set bit of *this is set in other (sizes must match)
  bool is_subset_of(const BitVec& other) const;

  bool operator==(const BitVec& other) const = default;

  const kernels::Word* data() const { return words_.data(); }
  kernels::Word* data() { return words_.data(); }

 private:
  std::size_t nbits_ = 0;
  std::vector<kernels::Word> words_;
};

}  // namespace nsg
