#include "macjt/io/json.hpp"

#include "macjt/error.hpp"

namespace macjt::io {

using arith::Factor;
using arith::FactorList;
using arith::QTPolynomial;
using arith::QTRational;
using arith::ZPoly;

namespace {

mpq_class parse_coeff(const json &j)
{
    try {
        mpq_class c;
        if (j.is_string()) {
            c.set_str(j.get<std::string>(), 10);
        } else if (j.is_number_integer()) {
            c = mpq_class(j.get<long>());
        } else {
            throw MathError(ErrorCode::ParseError, "coefficient must be a string or integer");
        }
        c.canonicalize();
        return c;
    } catch (const std::invalid_argument &) {
        throw MathError(ErrorCode::ParseError, "bad coefficient " + j.dump());
    }
}

json zpoly_to_json(const ZPoly &p)
{
    json out = json::array();
    const auto terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) out.push_back({it->q(), it->t(), it->coeff.get_str()});
    return out;
}

ZPoly zpoly_from_json(const json &j)
{
    std::vector<ZPoly::Term> terms;
    for (const auto &t : j) {
        const mpq_class c = parse_coeff(t.at(2));
        if (c.get_den() != 1) throw MathError(ErrorCode::ParseError, "integer coefficient expected");
        terms.push_back({ZPoly::make_key(t.at(0).get<int>(), t.at(1).get<int>()), c.get_num()});
    }
    return ZPoly::from_terms(std::move(terms));
}

} // namespace

json poly_to_json(const QTPolynomial &p)
{
    json out = json::array();
    const auto terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) out.push_back({it->q, it->t, it->coeff.get_str()});
    return out;
}

QTPolynomial poly_from_json(const json &j)
{
    if (!j.is_array()) throw MathError(ErrorCode::ParseError, "polynomial must be an array of triples");
    std::vector<QTPolynomial::Term> terms;
    for (const auto &t : j) {
        if (!t.is_array() || t.size() != 3) throw MathError(ErrorCode::ParseError, "bad term " + t.dump());
        terms.push_back({t[0].get<int>(), t[1].get<int>(), parse_coeff(t[2])});
    }
    return QTPolynomial::from_terms(terms);
}

json rational_to_json(const QTRational &r)
{
    return {{"num", poly_to_json(r.numerator())}, {"den", zpoly_to_json(r.is_zero() ? ZPoly(1) : r.denominator())}};
}

QTRational rational_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw MathError(ErrorCode::ParseError, "rational must have num and den");
    return QTRational::from_fraction(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

json rational_repr_to_json(const QTRational &r)
{
    json fs = json::array();
    for (const auto &[f, m] : r.den_factors()) {
        if (f->cyclo_index > 0)
            fs.push_back({{"phi", {f->cyclo_index, f->alpha, f->beta}}, {"m", m}});
        else
            fs.push_back({{"poly", zpoly_to_json(f->poly)}, {"m", m}});
    }
    return {{"num", poly_to_json(r.numerator())}, {"dq", r.den_q()}, {"dt", r.den_t()}, {"f", fs}};
}

QTRational rational_repr_from_json(const json &j)
{
    FactorList den;
    for (const auto &f : j.at("f")) {
        Factor g;
        if (f.contains("phi")) {
            const auto &a = f["phi"];
            g = arith::cyclotomic_factor(a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>());
        } else {
            g = arith::intern_factor(zpoly_from_json(f.at("poly")));
        }
        den.emplace_back(g, f.at("m").get<int>());
    }
    return QTRational::from_parts(poly_from_json(j.at("num")), j.at("dq").get<int>(), j.at("dt").get<int>(),
                                  std::move(den));
}

json partition_to_json(const Partition &p) { return json(p.parts()); }

Partition partition_from_json(const json &j)
{
    if (!j.is_array()) throw MathError(ErrorCode::ParseError, "partition must be an integer array");
    return Partition(j.get<std::vector<int>>());
}

json symfunc_to_json(const sym::SymFunc &f, bool factored)
{
    json terms = json::array();
    for (const auto &[lam, c] : f.terms())
        terms.push_back({{"partition", partition_to_json(lam)},
                         {"coeff", factored ? rational_repr_to_json(c) : rational_to_json(c)}});
    return {{"basis", "p"}, {"terms", terms}};
}

sym::SymFunc symfunc_from_json(const json &j, int degree_cap, bool factored)
{
    if (j.value("basis", "") != "p") throw MathError(ErrorCode::ParseError, "only the p basis is supported");
    sym::SymFunc f(degree_cap);
    for (const auto &t : j.at("terms"))
        f.add_term(partition_from_json(t.at("partition")),
                   factored ? rational_repr_from_json(t.at("coeff")) : rational_from_json(t.at("coeff")));
    return f;
}

} // namespace macjt::io
