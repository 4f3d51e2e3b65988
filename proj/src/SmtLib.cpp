#include "chc/SmtLib.h"

#include <sstream>

namespace chc::smtlib {

namespace {

bool isSimpleChar(char c) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) { return true; }
    static const std::string extra = "~!@$%^&*_-+=<>.?/";
    return extra.find(c) != std::string::npos;
}

bool isSimpleSymbol(const std::string& s) {
    if (s.empty()) { return false; }
    if (s[0] >= '0' && s[0] <= '9') { return false; }
    for (char c : s) {
        if (!isSimpleChar(c)) { return false; }
    }
    return true;
}

const char* opSymbol(Op op) {
    switch (op) {
        case Op::Not: return "not";
        case Op::And: return "and";
        case Op::Or: return "or";
        case Op::Implies: return "=>";
        case Op::Iff: return "=";
        case Op::Xor: return "xor";
        case Op::Ite: return "ite";
        case Op::Eq: return "=";
        case Op::Distinct: return "distinct";
        case Op::Neg: return "-";
        case Op::Add: return "+";
        case Op::Sub: return "-";
        case Op::Mul: return "*";
        case Op::IntDiv: return "div";
        case Op::Mod: return "mod";
        case Op::RealDiv: return "/";
        case Op::Le: return "<=";
        case Op::Lt: return "<";
        case Op::Ge: return ">=";
        case Op::Gt: return ">";
        case Op::BvNeg: return "bvneg";
        case Op::BvNot: return "bvnot";
        case Op::BvAdd: return "bvadd";
        case Op::BvSub: return "bvsub";
        case Op::BvMul: return "bvmul";
        case Op::BvUDiv: return "bvudiv";
        case Op::BvURem: return "bvurem";
        case Op::BvAnd: return "bvand";
        case Op::BvOr: return "bvor";
        case Op::BvXor: return "bvxor";
        case Op::BvShl: return "bvshl";
        case Op::BvLshr: return "bvlshr";
        case Op::BvAshr: return "bvashr";
        case Op::BvUlt: return "bvult";
        case Op::BvUle: return "bvule";
        case Op::BvUgt: return "bvugt";
        case Op::BvUge: return "bvuge";
        case Op::BvSlt: return "bvslt";
        case Op::BvSle: return "bvsle";
        case Op::BvSgt: return "bvsgt";
        case Op::BvSge: return "bvsge";
        case Op::BvConcat: return "concat";
        case Op::Select: return "select";
        case Op::Store: return "store";
        default: return nullptr;
    }
}

void printBvLit(std::ostringstream& out, const Int& value, unsigned width) {
    if (width % 4 == 0) {
        out << "#x";
        static const char* digits = "0123456789abcdef";
        std::string hex;
        Int v = value;
        for (unsigned i = 0; i < width / 4; ++i) {
            hex.push_back(digits[static_cast<unsigned>(v & 0xf)]);
            v >>= 4;
        }
        out << std::string(hex.rbegin(), hex.rend());
    } else {
        out << "#b";
        std::string bits;
        Int v = value;
        for (unsigned i = 0; i < width; ++i) {
            bits.push_back((v & 1) != 0 ? '1' : '0');
            v >>= 1;
        }
        out << std::string(bits.rbegin(), bits.rend());
    }
}

void printRec(std::ostringstream& out, Term t) {
    switch (t.kind()) {
        case Kind::Var:
            out << quoteSymbol(t.name());
            return;
        case Kind::BoolLit:
            out << (t.boolVal() ? "true" : "false");
            return;
        case Kind::IntLit:
            if (t.intVal() < 0) {
                out << "(- " << Int(-t.intVal()).str() << ")";
            } else {
                out << t.intVal().str();
            }
            return;
        case Kind::RealLit: {
            bool neg = t.realNum() < 0;
            Int num = neg ? Int(-t.realNum()) : t.realNum();
            std::string inner;
            if (t.realDen() == 1) {
                inner = num.str() + ".0";
            } else {
                inner = "(/ " + num.str() + ".0 " + t.realDen().str() + ".0)";
            }
            out << (neg ? "(- " + inner + ")" : inner);
            return;
        }
        case Kind::BvLit:
            printBvLit(out, t.intVal(), t.sort().bvWidth());
            return;
        case Kind::PredApp: {
            if (t.numArgs() == 0) {
                out << quoteSymbol(t.name());
                return;
            }
            out << "(" << quoteSymbol(t.name());
            for (const Term& a : t.args()) {
                out << " ";
                printRec(out, a);
            }
            out << ")";
            return;
        }
        case Kind::Quant: {
            out << (t.quantKind() == QuantKind::Exists ? "(exists (" : "(forall (");
            bool first = true;
            for (const auto& [name, sort] : t.boundVars()) {
                if (!first) { out << " "; }
                first = false;
                out << "(" << quoteSymbol(name) << " " << printSort(sort) << ")";
            }
            out << ") ";
            printRec(out, t.arg(0));
            out << ")";
            return;
        }
        case Kind::App:
            break;
    }
    switch (t.op()) {
        case Op::BvExtract:
            out << "((_ extract " << t.param0() << " " << t.param1() << ") ";
            printRec(out, t.arg(0));
            out << ")";
            return;
        case Op::BvZeroExt:
        case Op::BvSignExt:
            out << "((_ " << (t.op() == Op::BvZeroExt ? "zero_extend" : "sign_extend") << " " << t.param0() << ") ";
            printRec(out, t.arg(0));
            out << ")";
            return;
        case Op::ConstArray:
            out << "((as const " << printSort(t.sort()) << ") ";
            printRec(out, t.arg(0));
            out << ")";
            return;
        default:
            break;
    }
    out << "(" << opSymbol(t.op());
    for (const Term& a : t.args()) {
        out << " ";
        printRec(out, a);
    }
    out << ")";
}

} // namespace

std::string quoteSymbol(const std::string& name) {
    if (isSimpleSymbol(name)) { return name; }
    return "|" + name + "|";
}

std::string printSort(Sort s) {
    switch (s.kind()) {
        case SortKind::Bool: return "Bool";
        case SortKind::Int: return "Int";
        case SortKind::Real: return "Real";
        case SortKind::BitVec: return "(_ BitVec " + std::to_string(s.bvWidth()) + ")";
        case SortKind::Array: return "(Array " + printSort(s.arrayIndex()) + " " + printSort(s.arrayElem()) + ")";
    }
    return "?";
}

std::string printTerm(Term t) {
    std::ostringstream out;
    printRec(out, t);
    return out.str();
}

} // namespace chc::smtlib
