#include "surjtop/intlinalg.hpp"

#include <algorithm>
#include <utility>

namespace surjtop {

  IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

  IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (auto const& row : rows) {
      if (row.size() != cols_) {
        throw Error("ragged matrix literal");
      }
      for (long x : row) {
        entries_.emplace_back(x);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t size) {
    IntMatrix id(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      id(i, i) = 1;
    }
    return id;
  }

  bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Integer const& x) {
      return sgn(x) == 0;
    });
  }

  void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap((*this)(a, j), (*this)(b, j));
    }
  }

  void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      std::swap((*this)(i, a), (*this)(i, b));
    }
  }

  void IntMatrix::add_row_multiple(std::size_t dst,
                                   std::size_t src,
                                   Integer const& factor) {
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(dst, j) += factor * (*this)(src, j);
    }
  }

  void IntMatrix::add_col_multiple(std::size_t dst,
                                   std::size_t src,
                                   Integer const& factor) {
    for (std::size_t i = 0; i < rows_; ++i) {
      (*this)(i, dst) += factor * (*this)(i, src);
    }
  }

  void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(i, j) = -(*this)(i, j);
    }
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw Error("matrix dimension mismatch in product");
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (sgn(a(i, k)) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  std::string to_string(IntMatrix const& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
      out += i == 0 ? "[" : ", [";
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (j > 0) {
          out += ", ";
        }
        out += a(i, j).get_str();
      }
      out += "]";
    }
    return out + "]";
  }

  namespace {

    class SmithReducer {
     public:
      SmithReducer(IntMatrix const& a, bool keep)
          : d_(a), keep_(keep) {
        if (keep_) {
          u_ = IntMatrix::identity(a.rows());
          v_ = IntMatrix::identity(a.cols());
        }
      }

      SmithForm run() {
        std::size_t const bound = std::min(d_.rows(), d_.cols());
        std::size_t       rank  = 0;
        for (std::size_t t = 0; t < bound; ++t) {
          if (!move_min_pivot(t)) {
            break;
          }
          while (!clear_cross(t)) {
            move_min_pivot(t);
          }
          ++rank;
        }
        for (std::size_t i = 0; i < rank; ++i) {
          if (sgn(d_(i, i)) < 0) {
            row_negate(i);
          }
        }
        for (std::size_t i = 0; i < rank; ++i) {
          for (std::size_t j = i + 1; j < rank; ++j) {
            if (!mpz_divisible_p(d_(j, j).get_mpz_t(), d_(i, i).get_mpz_t())) {
              fold(i, j);
            }
          }
        }
        SmithForm result;
        for (std::size_t i = 0; i < rank; ++i) {
          result.diagonal.push_back(d_(i, i));
        }
        if (keep_) {
          result.left  = std::move(u_);
          result.right = std::move(v_);
        }
        return result;
      }

     private:
      // Moves the nonzero entry of least absolute value in the trailing
      // submatrix to (t, t). Returns false when the submatrix is zero.
      bool move_min_pivot(std::size_t t) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < d_.rows(); ++i) {
          for (std::size_t j = t; j < d_.cols(); ++j) {
            if (sgn(d_(i, j)) == 0) {
              continue;
            }
            if (!best || mpz_cmpabs(d_(i, j).get_mpz_t(), d_(best->first, best->second).get_mpz_t()) < 0) {
              best = {i, j};
            }
          }
        }
        if (!best) {
          return false;
        }
        row_swap(t, best->first);
        col_swap(t, best->second);
        return true;
      }

      // Reduces row t and column t modulo the pivot. True when both are zero
      // away from the diagonal.
      bool clear_cross(std::size_t t) {
        bool          clean = true;
        Integer const pivot = d_(t, t);
        for (std::size_t i = t + 1; i < d_.rows(); ++i) {
          if (sgn(d_(i, t)) != 0) {
            Integer q = d_(i, t) / pivot;
            row_add(i, t, -q);
            clean = clean && sgn(d_(i, t)) == 0;
          }
        }
        for (std::size_t j = t + 1; j < d_.cols(); ++j) {
          if (sgn(d_(t, j)) != 0) {
            Integer q = d_(t, j) / pivot;
            col_add(j, t, -q);
            clean = clean && sgn(d_(t, j)) == 0;
          }
        }
        return clean;
      }

      // Replaces the diagonal pair (a, b) at positions i < j by
      // (gcd(a, b), lcm(a, b)) with a unimodular 2x2 row and column step.
      void fold(std::size_t i, std::size_t j) {
        Integer const a = d_(i, i);
        Integer const b = d_(j, j);
        Integer       g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        Integer const a1 = a / g;
        Integer const b1 = b / g;
        // rows: [s t; -b1 a1], columns: [1 -t*b1; 1 s*a1]
        d_(i, i) = g;
        d_(j, j) = a1 * b;
        if (keep_) {
          mix_rows(u_, i, j, s, t, -b1, a1);
          mix_cols(v_, i, j, Integer(1), -t * b1, Integer(1), s * a1);
        }
      }

      static void mix_rows(IntMatrix&     m,
                           std::size_t    i,
                           std::size_t    j,
                           Integer const& p,
                           Integer const& q,
                           Integer const& r,
                           Integer const& s) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          Integer const x = m(i, c);
          Integer const y = m(j, c);
          m(i, c)         = p * x + q * y;
          m(j, c)         = r * x + s * y;
        }
      }

      // Right-multiplies columns (i, j) by [p q; r s].
      static void mix_cols(IntMatrix&     m,
                           std::size_t    i,
                           std::size_t    j,
                           Integer const& p,
                           Integer const& q,
                           Integer const& r,
                           Integer const& s) {
        for (std::size_t row = 0; row < m.rows(); ++row) {
          Integer const x = m(row, i);
          Integer const y = m(row, j);
          m(row, i)       = x * p + y * r;
          m(row, j)       = x * q + y * s;
        }
      }

      void row_swap(std::size_t a, std::size_t b) {
        d_.swap_rows(a, b);
        if (keep_) {
          u_.swap_rows(a, b);
        }
      }
      void col_swap(std::size_t a, std::size_t b) {
        d_.swap_cols(a, b);
        if (keep_) {
          v_.swap_cols(a, b);
        }
      }
      void row_add(std::size_t dst, std::size_t src, Integer const& f) {
        d_.add_row_multiple(dst, src, f);
        if (keep_) {
          u_.add_row_multiple(dst, src, f);
        }
      }
      void col_add(std::size_t dst, std::size_t src, Integer const& f) {
        d_.add_col_multiple(dst, src, f);
        if (keep_) {
          v_.add_col_multiple(dst, src, f);
        }
      }
      void row_negate(std::size_t i) {
        d_.negate_row(i);
        if (keep_) {
          u_.negate_row(i);
        }
      }

      IntMatrix d_;
      IntMatrix u_;
      IntMatrix v_;
      bool      keep_;
    };

  }  // namespace

  SmithForm smith_normal_form(IntMatrix const& a, SmithOptions options) {
    return SmithReducer(a, options.keep_transforms).run();
  }

  AbelianGroup cokernel(IntMatrix const& a) {
    SmithForm    snf = smith_normal_form(a);
    AbelianGroup g;
    for (auto const& d : snf.diagonal) {
      if (d > 1) {
        g.torsion.push_back(d);
      }
    }
    g.free_rank = a.rows() - snf.rank();
    return g;
  }

  std::optional<Integer> group_order(AbelianGroup const& g) {
    if (g.free_rank > 0) {
      return std::nullopt;
    }
    Integer order = 1;
    for (auto const& d : g.torsion) {
      order *= d;
    }
    return order;
  }

  bool is_finite_odd(AbelianGroup const& g) {
    return g.free_rank == 0
           && std::all_of(g.torsion.begin(), g.torsion.end(),
                          [](Integer const& d) { return is_odd(d); });
  }

  std::string to_string(AbelianGroup const& g) {
    std::string out;
    for (auto const& d : g.torsion) {
      if (!out.empty()) {
        out += " + ";
      }
      out += "Z/" + d.get_str();
    }
    if (g.free_rank > 0) {
      if (!out.empty()) {
        out += " + ";
      }
      out += g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
    }
    return out.empty() ? "0" : out;
  }

}  // namespace surjtop
