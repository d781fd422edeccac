#pragma once

#include <map>
#include <vector>

#include "wheelgebra/poly.hpp"
#include "wheelgebra/quiver.hpp"
#include "wheelgebra/wheel.hpp"

namespace wg {

struct DimVector {
  std::vector<int> dims;  // by vertex id, all >= 1
};

// Symbolic evaluation on the representation scheme of the given dimension
// vector. Each plain arrow e gets a d_head x d_tail matrix of commuting
// variables; reversed arrows get commuting variables in the even regime and
// odd (exterior-algebra) variables in the odd regime. Paths evaluate to
// matrix products, necklaces to traces, wheel elements of degree <= 2 to
// matrix tensors wired by the left permutation.
class RepModel {
 public:
  RepModel(const Quiver& q, DimVector d);

  const Quiver& quiver() const { return *q_; }
  const DimVector& dims() const { return d_; }
  int dim(int vertex) const { return d_.dims[vertex]; }

  bool arrow_is_odd(int arrow) const;
  // variable id for entry (i, j) of the matrix of `arrow` (i indexes the
  // head, j the tail); valid for even and odd variables respectively
  int var(int arrow, int i, int j) const;
  const std::vector<std::string>& var_names() const { return names_; }
  const std::vector<std::string>& odd_var_names() const { return odd_names_; }
  std::string poly_str(const Poly& p) const { return p.str(names_, odd_names_); }

  // matrices of polynomials, row = head index, column = tail index
  struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Poly> a;
    Poly& at(int i, int j) { return a[i * cols + j]; }
    const Poly& at(int i, int j) const { return a[i * cols + j]; }
  };

  Matrix ev_path(const Path& p) const;
  Poly ev_trace(const Path& closed) const;
  Poly ev_cyclic(const CyclicWord& c) const;

  // wheel elements: degree 0 gives a scalar, degree 1 a matrix, degree 2 a
  // tensor with two output and two input legs
  Poly ev_f0(const WheelElement& u) const;
  Matrix ev_f1(const WheelElement& u) const;
  struct Tensor2 {
    int d1 = 0, d2 = 0, e1 = 0, e2 = 0;  // output dims, input dims
    std::vector<Poly> a;
    Poly& at(int o1, int o2, int i1, int i2) {
      return a[((o1 * d2 + o2) * e1 + i1) * e2 + i2];
    }
    const Poly& at(int o1, int o2, int i1, int i2) const {
      return a[((o1 * d2 + o2) * e1 + i1) * e2 + i2];
    }
  };
  Tensor2 ev_f2(const WheelElement& u) const;

  // canonical Poisson bracket on the cotangent variables (even regime):
  // {X_e[i,j], X_{e*}[k,l]} = delta_il delta_jk
  Poly matrix_poisson(const Poly& f, const Poly& g) const;

  // odd Laplacian (odd regime): sum of mixed second derivatives pairing each
  // plain matrix entry with the transposed odd entry
  Poly odd_laplacian(const Poly& f) const;

  // numeric evaluation of an even polynomial at a rational point given by
  // matrices per arrow
  struct PointMatrix {
    std::vector<std::vector<Rational>> m;
  };
  Rational eval_at(const Poly& p, const std::map<int, PointMatrix>& point) const;

 private:
  const Quiver* q_;
  DimVector d_;
  std::map<int, int> var_base_;      // arrow -> first even var id
  std::map<int, int> odd_var_base_;  // arrow -> first odd var id
  std::vector<std::string> names_, odd_names_;
};

}  // namespace wg
