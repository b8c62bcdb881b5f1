#include <sstream>

#include "macjt/expansion/expansion.hpp"
#include "macjt/io/json.hpp"

namespace macjt::expansion {

namespace {

std::string join(const Composition &a, const char *sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? sep : "") + std::to_string(a[i]);
    return s;
}

std::string latex_poly(const arith::ZPoly &p, const mpq_class &scale)
{
    std::ostringstream os;
    bool first = true;
    const auto terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        mpq_class c = scale * mpq_class(it->coeff);
        const bool neg = c < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        const int q = it->q(), t = it->t();
        if (c != 1 || (q == 0 && t == 0)) {
            if (c.get_den() == 1)
                os << c.get_num().get_str();
            else
                os << "\\tfrac{" << c.get_num().get_str() << "}{" << c.get_den().get_str() << "}";
        }
        if (q) os << "q" << (q != 1 ? "^{" + std::to_string(q) + "}" : "");
        if (t) os << "t" << (t != 1 ? "^{" + std::to_string(t) + "}" : "");
    }
    return os.str();
}

// Coefficient prefix for a product: "", "-", "3*" or "(...)*".
std::string text_coefficient(const QTRational &c, bool first)
{
    std::string sign = first ? "" : " + ";
    if (c.is_one()) return sign;
    if ((-c).is_one()) return first ? "-" : " - ";
    if (c.is_constant()) {
        const mpq_class v = c.constant_value();
        if (v < 0) return (first ? "-" : " - ") + mpq_class(-v).get_str() + "*";
        return sign + v.get_str() + "*";
    }
    return sign + "(" + c.to_string() + ")*";
}

std::string latex_coefficient(const QTRational &c, bool first)
{
    std::string sign = first ? "" : " + ";
    if (c.is_one()) return sign;
    if ((-c).is_one()) return first ? "-" : " - ";
    return sign + "\\left(" + latex(c) + "\\right) ";
}

struct Names {
    std::string lhs, row, target, g;
};

Names names(int theorem, bool q_equals_t)
{
    if (q_equals_t) return {"s", theorem % 2 ? "h" : "e", "s", theorem == 3 ? "h" : "e"};
    if (theorem == 1 || theorem == 3) return {"Q", "Q", "Q", "g"};
    return {"P", "e", "P", "e"};
}

std::string product_text(const Names &nm, const ExpansionTerm &t)
{
    std::string s;
    if (t.row > 0) s += nm.row + (nm.row == "Q" ? "(" + std::to_string(t.row) + ")" : std::to_string(t.row));
    if (!t.target.empty()) s += (s.empty() ? "" : "*") + nm.target + "(" + join(t.target) + ")";
    return s.empty() ? "1" : s;
}

std::string product_latex(const Names &nm, const ExpansionTerm &t)
{
    std::string s;
    if (t.row > 0) s += nm.row + (nm.row == "Q" ? "_{(" + std::to_string(t.row) + ")}" : "_{" + std::to_string(t.row) + "}");
    if (!t.target.empty()) s += (s.empty() ? "" : " ") + nm.target + "_{(" + join(t.target) + ")}";
    return s.empty() ? "1" : s;
}

std::string monomials_text(const std::string &letter, const Partition &mu)
{
    if (mu.length() == 0) return "1";
    std::string s;
    for (std::size_t i = 0; i < mu.length(); ++i) s += (i ? "*" : "") + letter + std::to_string(mu[i]);
    return s;
}

std::string monomials_latex(const std::string &letter, const Partition &mu)
{
    if (mu.length() == 0) return "1";
    std::string s;
    for (std::size_t i = 0; i < mu.length(); ++i) s += (i ? " " : "") + letter + "_{" + std::to_string(mu[i]) + "}";
    return s;
}

nlohmann::json term_json(const ExpansionTerm &t, bool multiplicities)
{
    nlohmann::json j{{"theta", t.theta}, {"coefficient", io::rational_to_json(t.coefficient)}, {"row", t.row}};
    j[multiplicities ? "multiplicities" : "target"] = t.target;
    return j;
}

} // namespace

std::string latex(const QTRational &r)
{
    if (r.is_zero()) return "0";
    const std::string num = latex_poly(r.numerator().primitive(), r.numerator().scale());
    const arith::ZPoly den = r.denominator();
    if (den.is_constant() && den.lead().coeff == 1) return num;
    return "\\frac{" + num + "}{" + latex_poly(den, 1) + "}";
}

nlohmann::json to_json(const Expansion &x)
{
    nlohmann::json j;
    j["lambda"] = x.theorem == 1 ? x.lambda : x.source.parts();
    if (x.theorem == 2) j["multiplicities"] = x.lambda;
    j["theorem"] = x.theorem;
    j["parameters"] = x.theorem == 1 ? "q,t" : "t,q";
    j["q_equals_t"] = x.q_equals_t;
    j["terms"] = nlohmann::json::array();
    for (const auto &t : x.terms) j["terms"].push_back(term_json(t, false));
    j["off_basis"] = nlohmann::json::array();
    for (const auto &t : x.off_basis) j["off_basis"].push_back(term_json(t, x.theorem == 2));
    return j;
}

nlohmann::json to_json(const GResult &x)
{
    nlohmann::json j;
    j["lambda"] = x.theorem == 3 ? x.lambda : x.source.parts();
    if (x.theorem == 4) j["multiplicities"] = x.lambda;
    j["theorem"] = x.theorem;
    j["parameters"] = x.theorem == 3 ? "q,t" : "t,q";
    j["q_equals_t"] = x.q_equals_t;
    j["terms"] = nlohmann::json::array();
    for (const auto &t : x.terms)
        j["terms"].push_back(
            {{"theta", t.theta}, {"coefficient", io::rational_to_json(t.coefficient)}, {"target", t.index}});
    j["aggregate"] = nlohmann::json::array();
    for (const auto &[mu, c] : x.aggregate)
        j["aggregate"].push_back({{"index", mu.parts()}, {"coefficient", io::rational_to_json(c)}});
    return j;
}

std::string render_text(const Expansion &x)
{
    const Names nm = names(x.theorem, x.q_equals_t);
    std::ostringstream os;
    os << nm.lhs << "(" << x.source.to_string() << ") = ";
    bool first = true;
    for (const auto &t : x.terms) {
        os << text_coefficient(t.coefficient, first) << product_text(nm, t);
        first = false;
    }
    if (first) os << "0";
    os << "\n";
    if (x.q_equals_t) {
        const IntExpansion full = x.theorem == 1 ? jacobi_trudi(x.source.parts())
                                                 : nagelsbach_kotska(x.source.conjugate().parts());
        os << std::string(x.source.to_string().size() + 3, ' ') << " = ";
        first = true;
        for (auto it = full.begin(); it != full.end(); ++it) {
            os << text_coefficient(QTRational(mpq_class(it->second)), first) << monomials_text(nm.row, it->first);
            first = false;
        }
        os << "\n";
    }
    for (const auto &t : x.off_basis)
        os << "off-basis theta=(" << join(t.theta) << ") " << (x.theorem == 2 ? "multiplicities" : "target") << "=("
           << join(t.target) << ") coefficient " << t.coefficient.to_string() << "\n";
    return os.str();
}

std::string render_text(const GResult &x)
{
    const Names nm = names(x.theorem, x.q_equals_t);
    std::ostringstream os;
    os << nm.lhs << "(" << x.source.to_string() << ") = ";
    bool first = true;
    for (auto it = x.aggregate.begin(); it != x.aggregate.end(); ++it) {
        os << text_coefficient(it->second, first) << monomials_text(nm.g, it->first);
        first = false;
    }
    if (first) os << "0";
    os << "\n";
    return os.str();
}

std::string render_latex(const Expansion &x)
{
    const Names nm = names(x.theorem, x.q_equals_t);
    std::ostringstream os;
    os << nm.lhs << "_{(" << x.source.to_string() << ")} = ";
    bool first = true;
    for (const auto &t : x.terms) {
        os << latex_coefficient(t.coefficient, first) << product_latex(nm, t);
        first = false;
    }
    if (first) os << "0";
    os << "\n";
    return os.str();
}

std::string render_latex(const GResult &x)
{
    const Names nm = names(x.theorem, x.q_equals_t);
    std::ostringstream os;
    os << nm.lhs << "_{(" << x.source.to_string() << ")} = ";
    bool first = true;
    for (auto it = x.aggregate.begin(); it != x.aggregate.end(); ++it) {
        os << latex_coefficient(it->second, first) << monomials_latex(nm.g, it->first);
        first = false;
    }
    if (first) os << "0";
    os << "\n";
    return os.str();
}

} // namespace macjt::expansion
