#include "tlsf/ast.hpp"

namespace tlsf {

std::string to_string(Model m) { return m == Model::Mealy ? "Mealy" : "Moore"; }

std::string to_string(const SemanticsTag& s) {
  std::string r = to_string(s.model);
  if (s.strict) r += ",Strict";
  return r;
}

Expr Expr::make(Node n) {
  Expr e;
  e.node_ = std::make_shared<const Node>(std::move(n));
  return e;
}

Expr Expr::nat_lit(uint64_t v, SourcePos p) {
  Node n{ExprKind::NatLit, p};
  n.nat = v;
  return make(std::move(n));
}
Expr Expr::bool_lit(bool v, SourcePos p) {
  Node n{ExprKind::BoolLit, p};
  n.boolean = v;
  return make(std::move(n));
}
Expr Expr::ident(std::string name, SourcePos p) {
  Node n{ExprKind::Ident, p};
  n.name = std::move(name);
  return make(std::move(n));
}
Expr Expr::bus_index(Expr base, Expr index, SourcePos p) {
  Node n{ExprKind::BusIndex, p};
  n.children = {std::move(base), std::move(index)};
  return make(std::move(n));
}
Expr Expr::apply(std::string name, std::vector<Expr> args, SourcePos p) {
  Node n{ExprKind::Apply, p};
  n.name = std::move(name);
  n.children = std::move(args);
  return make(std::move(n));
}
Expr Expr::unary(UnaryOp op, Expr operand, SourcePos p) {
  Node n{ExprKind::Unary, p};
  n.unary_op = op;
  n.children = {std::move(operand)};
  return make(std::move(n));
}
Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs, SourcePos p) {
  Node n{ExprKind::Binary, p};
  n.binary_op = op;
  n.children = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}
Expr Expr::big_op(BigOpKind op, std::vector<Binder> binders, Expr body, SourcePos p) {
  Node n{ExprKind::BigOp, p};
  n.big_op = op;
  n.binders = std::move(binders);
  n.children = {std::move(body)};
  return make(std::move(n));
}
Expr Expr::set_display(std::vector<Expr> elems, SourcePos p) {
  Node n{ExprKind::SetDisplay, p};
  n.children = std::move(elems);
  return make(std::move(n));
}
Expr Expr::set_range(Expr x, Expr y, Expr z, SourcePos p) {
  Node n{ExprKind::SetRange, p};
  n.children = {std::move(x), std::move(y), std::move(z)};
  return make(std::move(n));
}
Expr Expr::next_stack(Expr count, Expr body, SourcePos p) {
  Node n{ExprKind::NextStack, p};
  n.children = {std::move(count), std::move(body)};
  return make(std::move(n));
}
Expr Expr::finally_range(Expr lo, Expr hi, Expr body, SourcePos p) {
  Node n{ExprKind::FinallyRange, p};
  n.children = {std::move(lo), std::move(hi), std::move(body)};
  return make(std::move(n));
}
Expr Expr::globally_range(Expr lo, Expr hi, Expr body, SourcePos p) {
  Node n{ExprKind::GloballyRange, p};
  n.children = {std::move(lo), std::move(hi), std::move(body)};
  return make(std::move(n));
}

}  // namespace tlsf
