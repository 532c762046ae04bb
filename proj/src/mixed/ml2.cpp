#include "wdm/mixed/structure.hpp"

namespace wdm {

Matrix ml2_std(const ML2Element& m, long j) {
  if (j < 0) throw DomainError("ml2: negative index");
  Q det = m.det();
  if (det == 0) throw DomainError("ml2: matrix is singular");
  const std::size_t n = static_cast<std::size_t>(j) + 1;
  Poly left(Vec{m.a, m.c}), right(Vec{m.b, m.d});
  Q scale = pow(det, -j);
  Matrix out(n, n);
  for (long r = 0; r <= j; ++r) {
    Poly p = scale * (pow(left, static_cast<unsigned>(j - r)) * pow(right, static_cast<unsigned>(r)));
    for (std::size_t s = 0; s < n; ++s) out(s, static_cast<std::size_t>(r)) = p.coeff(s);
  }
  return out;
}

Matrix ml2_act(const ML2Element& m, const StructureDecomposition& sd) {
  if (m.sqrt_det * m.sqrt_det != m.det()) throw DomainError("ml2: sqrt_det does not square to the determinant");
  if (m.det() == 0) throw DomainError("ml2: matrix is singular");
  const std::size_t n = sd.embedding.rows();
  Matrix D(n, n);
  std::size_t off = 0;
  for (const auto& b : sd.blocks) {
    Matrix blk = pow(m.sqrt_det, b.i + b.j) * kron(Matrix::identity(b.space.dim()), ml2_std(m, b.j));
    D.set_block(off, off, blk);
    off += blk.rows();
  }
  return sd.embedding * D * sd.inverse;
}

Matrix ml2_act(const ML2Element& m, const FilteredWDRep& v) { return ml2_act(m, structure_decompose(v)); }

}  // namespace wdm
