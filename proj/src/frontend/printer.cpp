#include "probe/frontend/printer.hpp"

#include <sstream>

namespace probe::frontend {

namespace {

int precedence(const AExpr& e) {
  switch (e.kind) {
    case AExpr::Kind::Add:
    case AExpr::Kind::Sub: return 1;
    case AExpr::Kind::Mul: return 2;
    default: return 3;
  }
}

void print_aexpr(std::ostream& out, const AExpr& e) {
  switch (e.kind) {
    case AExpr::Kind::Literal:
      out << e.value;
      return;
    case AExpr::Kind::Variable:
      out << e.name;
      return;
    default:
      break;
  }
  int prec = precedence(e);
  // Left operands need parentheses only when they bind looser; right
  // operands also when they bind equally, since every operator is
  // left-associative.
  bool wrap_l = precedence(*e.lhs) < prec;
  bool wrap_r = precedence(*e.rhs) <= prec;
  if (wrap_l) out << "(";
  print_aexpr(out, *e.lhs);
  if (wrap_l) out << ")";
  out << (e.kind == AExpr::Kind::Add ? " + " : e.kind == AExpr::Kind::Sub ? " - " : " * ");
  if (wrap_r) out << "(";
  print_aexpr(out, *e.rhs);
  if (wrap_r) out << ")";
}

void print_bexpr(std::ostream& out, const BExpr& e) {
  switch (e.kind) {
    case BExpr::Kind::True:
      out << "true";
      return;
    case BExpr::Kind::False:
      out << "false";
      return;
    case BExpr::Kind::Cmp:
      print_aexpr(out, *e.lhs);
      out << " " << print(e.op) << " ";
      print_aexpr(out, *e.rhs);
      return;
    case BExpr::Kind::Not:
      out << "!(";
      print_bexpr(out, *e.a);
      out << ")";
      return;
    case BExpr::Kind::And:
    case BExpr::Kind::Or: {
      auto operand = [&](const BExpr& c, bool right) {
        bool junction = c.kind == BExpr::Kind::And || c.kind == BExpr::Kind::Or;
        bool wrap = junction && (c.kind != e.kind || right);
        if (wrap) out << "(";
        print_bexpr(out, c);
        if (wrap) out << ")";
      };
      operand(*e.a, false);
      out << (e.kind == BExpr::Kind::And ? " & " : " | ");
      operand(*e.b, true);
      return;
    }
  }
}

class StmtPrinter {
 public:
  explicit StmtPrinter(const parametric::ParameterSet& params) : params_(params) {}

  void sequence(std::ostream& out, const Stmt& s, int indent) {
    const Stmt* cur = &s;
    while (cur->kind == Stmt::Kind::Seq) {
      if (cur->first->kind == Stmt::Kind::Seq) {
        // A left-nested sequence only arises from an explicit block.
        line(out, indent) << "{\n";
        sequence(out, *cur->first, indent + 1);
        line(out, indent) << "}\n";
      } else {
        single(out, *cur->first, indent);
      }
      cur = cur->second.get();
    }
    single(out, *cur, indent);
  }

 private:
  std::ostream& line(std::ostream& out, int indent) {
    for (int i = 0; i < indent; ++i) out << "  ";
    return out;
  }

  void block(std::ostream& out, const Stmt& s, int indent) {
    out << "{\n";
    sequence(out, s, indent + 1);
    line(out, indent) << "}";
  }

  void single(std::ostream& out, const Stmt& s, int indent) {
    switch (s.kind) {
      case Stmt::Kind::Skip:
        line(out, indent) << "skip;\n";
        return;
      case Stmt::Kind::Abort:
        line(out, indent) << "abort;\n";
        return;
      case Stmt::Kind::Assign:
        line(out, indent) << s.name << " := ";
        print_aexpr(out, *s.expr);
        out << ";\n";
        return;
      case Stmt::Kind::Uniform:
        line(out, indent) << s.name << " := unif(";
        print_aexpr(out, *s.lo);
        out << ", ";
        print_aexpr(out, *s.hi);
        out << ");\n";
        return;
      case Stmt::Kind::Seq:
        line(out, indent) << "{\n";
        sequence(out, s, indent + 1);
        line(out, indent) << "}\n";
        return;
      case Stmt::Kind::If:
        line(out, indent) << "if (";
        print_bexpr(out, *s.cond);
        out << ") ";
        block(out, *s.first, indent);
        if (s.second->kind != Stmt::Kind::Skip) {
          out << " else ";
          block(out, *s.second, indent);
        }
        out << "\n";
        return;
      case Stmt::Kind::While:
        line(out, indent) << "while (";
        print_bexpr(out, *s.cond);
        out << ") ";
        block(out, *s.first, indent);
        out << "\n";
        return;
      case Stmt::Kind::Observe:
        line(out, indent) << "observe(";
        print_bexpr(out, *s.cond);
        out << ");\n";
        return;
      case Stmt::Kind::Prob:
      case Stmt::Kind::Nondet:
        line(out, indent);
        block(out, *s.first, indent);
        if (s.kind == Stmt::Kind::Prob) {
          out << " [" << s.weight.str(params_) << "] ";
        } else {
          out << " [] ";
        }
        block(out, *s.second, indent);
        out << "\n";
        return;
    }
  }

  const parametric::ParameterSet& params_;
};

}  // namespace

std::string print(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

std::string print(const AExpr& expr) {
  std::ostringstream out;
  print_aexpr(out, expr);
  return out.str();
}

std::string print(const BExpr& expr) {
  std::ostringstream out;
  print_bexpr(out, expr);
  return out.str();
}

std::string print(const Stmt& stmt, const parametric::ParameterSet& parameters, int indent) {
  std::ostringstream out;
  StmtPrinter(parameters).sequence(out, stmt, indent);
  return out.str();
}

std::string print(const Program& program) {
  std::ostringstream out;
  for (const auto& d : program.declarations) out << "int " << d.name << " := " << d.initial << ";\n";
  if (!program.declarations.empty()) out << "\n";
  if (program.body) out << print(*program.body, program.parameters);
  return out.str();
}

}  // namespace probe::frontend
