#ifndef SURJTOP_INTLINALG_HPP
#define SURJTOP_INTLINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "surjtop/integer.hpp"

namespace surjtop {

  // Dense row-major integer matrix. Either dimension may be zero.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t size);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }

    Integer& operator()(std::size_t i, std::size_t j) {
      return entries_[i * cols_ + j];
    }
    Integer const& operator()(std::size_t i, std::size_t j) const {
      return entries_[i * cols_ + j];
    }

    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, Integer const& factor);
    // col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, Integer const& factor);
    void negate_row(std::size_t i);

    bool operator==(IntMatrix const& other) const = default;

   private:
    std::size_t          rows_ = 0;
    std::size_t          cols_ = 0;
    std::vector<Integer> entries_;
  };

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);

  std::string to_string(IntMatrix const& a);

  struct SmithForm {
    // Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
    std::vector<Integer> diagonal;
    // Present only when requested: U * A * V == D.
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;

    std::size_t rank() const noexcept {
      return diagonal.size();
    }
  };

  struct SmithOptions {
    bool keep_transforms = false;
  };

  SmithForm smith_normal_form(IntMatrix const& a, SmithOptions options = {});

  // Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
  // 2 <= d_1 | ... | d_k.
  struct AbelianGroup {
    std::vector<Integer> torsion;
    std::size_t          free_rank = 0;

    bool operator==(AbelianGroup const& other) const = default;
  };

  // Cokernel of the map Z^cols -> Z^rows given by `a`.
  AbelianGroup cokernel(IntMatrix const& a);

  // Order of the group, or nullopt when infinite.
  std::optional<Integer> group_order(AbelianGroup const& g);

  bool is_finite_odd(AbelianGroup const& g);

  // "0", "Z", "Z/3", "Z/2 + Z/4 + Z^2".
  std::string to_string(AbelianGroup const& g);

}  // namespace surjtop

#endif  // SURJTOP_INTLINALG_HPP
