#include "wheelgebra/rep.hpp"

#include <stdexcept>

namespace wg {

RepModel::RepModel(const Quiver& q, DimVector d) : q_(&q), d_(std::move(d)) {
  if (static_cast<int>(d_.dims.size()) != q.num_vertices())
    throw std::invalid_argument("RepModel: dimension vector size mismatch");
  for (int v : d_.dims)
    if (v < 1) throw std::invalid_argument("RepModel: dimensions must be positive");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (ar.stratum == Stratum::Diff) continue;
    int rows = d_.dims[ar.head], cols = d_.dims[ar.tail];
    bool odd = arrow_is_odd(a);
    auto& base = odd ? odd_var_base_ : var_base_;
    auto& names = odd ? odd_names_ : names_;
    base[a] = static_cast<int>(names.size());
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        names.push_back((odd ? "xi_" : "") + ar.name + "[" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + "]");
  }
}

bool RepModel::arrow_is_odd(int arrow) const {
  return q_->arrow(arrow).stratum == Stratum::Star && q_->star_parity() == 1;
}

int RepModel::var(int arrow, int i, int j) const {
  const Arrow& ar = q_->arrow(arrow);
  int cols = d_.dims[ar.tail];
  const auto& base = arrow_is_odd(arrow) ? odd_var_base_ : var_base_;
  auto it = base.find(arrow);
  if (it == base.end()) throw std::invalid_argument("RepModel: arrow has no variables");
  return it->second + i * cols + j;
}

RepModel::Matrix RepModel::ev_path(const Path& p) const {
  const Quiver& q = *q_;
  if (p.is_trivial()) {
    int d = dim(p.trivial_vertex());
    Matrix m{d, d, std::vector<Poly>(d * d)};
    for (int i = 0; i < d; ++i) m.at(i, i) = Poly::constant(1);
    return m;
  }
  // single-arrow matrices chained along the path
  auto arrow_matrix = [&](int a) {
    const Arrow& ar = q.arrow(a);
    if (ar.stratum == Stratum::Diff)
      throw std::invalid_argument("RepModel: differential arrows have no evaluation");
    int rows = dim(ar.head), cols = dim(ar.tail);
    Matrix m{rows, cols, std::vector<Poly>(rows * cols)};
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m.at(i, j) = arrow_is_odd(a) ? Poly::odd_variable(var(a, i, j))
                                     : Poly::variable(var(a, i, j));
    return m;
  };
  // accumulate in path order; for odd entries the multiplication order of
  // the variables follows the letters, which is what makes the evaluation
  // intertwine the BV operator with the odd Laplacian
  Matrix acc = arrow_matrix(p.letter(0));
  for (int k = 1; k < p.length(); ++k) {
    Matrix nxt = arrow_matrix(p.letter(k));
    Matrix out{nxt.rows, acc.cols, std::vector<Poly>(nxt.rows * acc.cols)};
    for (int i = 0; i < nxt.rows; ++i)
      for (int j = 0; j < acc.cols; ++j) {
        Poly s;
        for (int k2 = 0; k2 < nxt.cols; ++k2) s += acc.at(k2, j) * nxt.at(i, k2);
        out.at(i, j) = s;
      }
    acc = std::move(out);
  }
  return acc;
}

Poly RepModel::ev_trace(const Path& closed) const {
  if (!closed.closed(*q_)) throw std::invalid_argument("RepModel: trace of an open path");
  Matrix m = ev_path(closed);
  Poly t;
  for (int i = 0; i < m.rows; ++i) t += m.at(i, i);
  return t;
}

Poly RepModel::ev_cyclic(const CyclicWord& c) const { return ev_trace(c.as_path(*q_)); }

Poly RepModel::ev_f0(const WheelElement& u) const {
  Poly out;
  for (const auto& [k, c] : u.terms()) {
    if (k.degree() != 0) throw std::invalid_argument("RepModel: not a degree-zero element");
    Poly t = Poly::constant(c);
    for (const auto& cy : k.cycs) t = t * ev_cyclic(cy);
    out += t;
  }
  return out;
}

RepModel::Matrix RepModel::ev_f1(const WheelElement& u) const {
  Matrix out;
  bool first = true;
  for (const auto& [k, c] : u.terms()) {
    if (k.degree() != 1) throw std::invalid_argument("RepModel: not a degree-one element");
    Matrix m = ev_path(k.word[0]);
    Poly scale = Poly::constant(c);
    for (const auto& cy : k.cycs) scale = scale * ev_cyclic(cy);
    if (first) {
      out = Matrix{m.rows, m.cols, std::vector<Poly>(m.rows * m.cols)};
      first = false;
    }
    if (m.rows != out.rows || m.cols != out.cols)
      throw std::invalid_argument("RepModel: mixed shapes in a degree-one element");
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) out.at(i, j) += scale * m.at(i, j);
  }
  return out;
}

RepModel::Tensor2 RepModel::ev_f2(const WheelElement& u) const {
  // entry at (o1, o2; i1, i2) multiplies M_k[o_k, i_{sigma(k)}] over the two
  // slots: output leg k reads slot k, input leg sigma(k) feeds slot k
  Tensor2 out;
  bool first = true;
  for (const auto& [k, c] : u.terms()) {
    if (k.degree() != 2) throw std::invalid_argument("RepModel: not a degree-two element");
    Matrix m0 = ev_path(k.word[0]);
    Matrix m1 = ev_path(k.word[1]);
    Poly scale = Poly::constant(c);
    for (const auto& cy : k.cycs) scale = scale * ev_cyclic(cy);
    int in0 = k.sigma[0], in1 = k.sigma[1];  // input wire labels of the slots
    int e[2];
    e[in0] = m0.cols;
    e[in1] = m1.cols;
    if (first) {
      out = Tensor2{m0.rows, m1.rows, e[0], e[1],
                    std::vector<Poly>(m0.rows * m1.rows * e[0] * e[1])};
      first = false;
    }
    if (out.d1 != m0.rows || out.d2 != m1.rows || out.e1 != e[0] || out.e2 != e[1])
      throw std::invalid_argument("RepModel: mixed shapes in a degree-two element");
    for (int o1 = 0; o1 < out.d1; ++o1)
      for (int o2 = 0; o2 < out.d2; ++o2)
        for (int i1 = 0; i1 < out.e1; ++i1)
          for (int i2 = 0; i2 < out.e2; ++i2) {
            int ins[2] = {i1, i2};
            out.at(o1, o2, i1, i2) +=
                scale * m0.at(o1, ins[in0]) * m1.at(o2, ins[in1]);
          }
  }
  return out;
}

Poly RepModel::matrix_poisson(const Poly& f, const Poly& g) const {
  if (f.has_odd() || g.has_odd())
    throw std::invalid_argument("matrix_poisson: odd variables present");
  if (q_->star_parity() != 0)
    throw std::invalid_argument("matrix_poisson: even regime only");
  Poly out;
  for (int e : q_->base_arrows()) {
    int es = q_->star_of(e);
    int rows = dim(q_->arrow(e).head), cols = dim(q_->arrow(e).tail);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        // {X[i,j], X*[j,i]} = 1
        out += f.derivative(var(e, i, j)) * g.derivative(var(es, j, i));
        out -= f.derivative(var(es, j, i)) * g.derivative(var(e, i, j));
      }
  }
  return out;
}

Poly RepModel::odd_laplacian(const Poly& f) const {
  if (q_->star_parity() != 1)
    throw std::invalid_argument("odd_laplacian: odd regime only");
  Poly out;
  for (int e : q_->base_arrows()) {
    int es = q_->star_of(e);
    int rows = dim(q_->arrow(e).head), cols = dim(q_->arrow(e).tail);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        out += f.derivative(var(e, i, j)).odd_derivative(var(es, j, i));
  }
  return out;
}

Rational RepModel::eval_at(const Poly& p, const std::map<int, PointMatrix>& point) const {
  std::map<int, Rational> values;
  for (const auto& [arrow, mat] : point) {
    const Arrow& ar = q_->arrow(arrow);
    int rows = dim(ar.head), cols = dim(ar.tail);
    if (static_cast<int>(mat.m.size()) != rows)
      throw std::invalid_argument("eval_at: matrix shape mismatch");
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>(mat.m[i].size()) != cols)
        throw std::invalid_argument("eval_at: matrix shape mismatch");
      for (int j = 0; j < cols; ++j) values[var(arrow, i, j)] = mat.m[i][j];
    }
  }
  return p.eval(values);
}

}  // namespace wg
