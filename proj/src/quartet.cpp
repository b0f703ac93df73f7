#include "conlat/quartet.hpp"

namespace conlat {

Quartet check_quartet(const GaloisConnection& g1, const GaloisConnection& g2,
                      const GaloisConnection& a, const GaloisConnection& b) {
  if (!a.source().same_as(g1.source()) || !b.source().same_as(g1.target()) ||
      !a.target().same_as(g2.source()) || !b.target().same_as(g2.target()))
    fail(Err::BoundaryMismatch, "quartet boundaries do not agree");
  for (Idx x = 0; x < g1.source().size(); ++x)
    if (!g2.target().equiv(b.left(g1.left(x)), g2.left(a.left(x))))
      fail(Err::SquareNotCommuting, "left legs disagree",
           {{"element", g1.source().label(x)}, {"equation", "left(g1)*left(b) = left(a)*left(g2)"}});
  for (Idx y = 0; y < g2.target().size(); ++y)
    if (!g1.source().equiv(a.right(g2.right(y)), g1.right(b.right(y))))
      fail(Err::SquareNotCommuting, "right legs disagree",
           {{"element", g2.target().label(y)}, {"equation", "right(g2)*right(a) = right(b)*right(g1)"}});
  return Quartet{g1, g2, a, b};
}

namespace {

void require_poset_cells(const Quartet& q) {
  for (const Preorder* p : {&q.g1.source(), &q.g1.target(), &q.g2.source(),
                            &q.g2.target()})
    if (!p->is_poset()) fail(Err::NotPoset, "quartet 0-cell is not a poset");
}

}  // namespace

GaloisConnection factor_reflection_quartet(const Quartet& q) {
  if (!classify_connection(q.g1).reflection)
    fail(Err::NotReflection, "vertical source is not a reflection");
  require_poset_cells(q);

  KernelFactorization k1 = kernel_factorize(q.g1);
  KernelFactorization k2 = kernel_factorize(q.g2);

  // c_left = a_left, c_right = closure(g2) then a_right
  IdxVec cleft = q.a.left_table();
  IdxVec cright(q.a.target().size());
  for (Idx a2 = 0; a2 < q.a.target().size(); ++a2)
    cright[a2] = q.a.right(q.g2.closure(a2));
  GaloisConnection c(k1.ker_left, k2.ker_left, std::move(cleft), std::move(cright));

  check_quartet(k1.clo, k2.clo, q.a, c);
  check_quartet(k1.lift0, k2.lift0, c, q.b);
  return c;
}

GaloisConnection factor_coreflection_quartet(const Quartet& q) {
  if (!classify_connection(q.g2).coreflection)
    fail(Err::NotCoreflection, "vertical target is not a coreflection");
  require_poset_cells(q);

  KernelFactorization k1 = kernel_factorize(q.g1);
  KernelFactorization k2 = kernel_factorize(q.g2);

  // d_left = interior(g1) then b_left, d_right = b_right
  IdxVec dleft(q.b.source().size());
  for (Idx b1 = 0; b1 < q.b.source().size(); ++b1)
    dleft[b1] = q.b.left(q.g1.interior(b1));
  IdxVec dright = q.b.right_table();
  GaloisConnection d(k1.ker_right, k2.ker_right, std::move(dleft), std::move(dright));

  check_quartet(k1.lift1, k2.lift1, q.a, d);
  check_quartet(k1.intr, k2.intr, d, q.b);
  return d;
}

}  // namespace conlat
