#include "scissors/serialize.hpp"

#include <stdexcept>

namespace scissors {

Json int_to_json(const Int& n) { return to_string(n); }

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    return parse_int(j.get<std::string>());
}

Json to_json(const QuadInt& x) {
    return Json{{"re", int_to_json(x.re())}, {"im", int_to_json(x.im())}, {"m", x.ring().m()}};
}

QuadInt quadint_from_json(const Json& j) {
    return QuadInt(RingDesc::make(j.at("m").get<int>()), int_from_json(j.at("re")),
                   int_from_json(j.at("im")));
}

Json to_json(const IntMatrix& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t k = 0; k < a.cols(); ++k) r.push_back(int_to_json(a(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    std::vector<Vec> rows;
    std::size_t cols = 0;
    for (const auto& r : j) {
        Vec v;
        for (const auto& e : r) v.push_back(int_from_json(e));
        if (!rows.empty() && v.size() != cols) throw std::invalid_argument("ragged matrix");
        cols = v.size();
        rows.push_back(std::move(v));
    }
    return IntMatrix::from_rows(rows, cols);
}

Json to_json(const Structure& s) {
    Json t = Json::array();
    for (const auto& d : s.torsion) t.push_back(int_to_json(d));
    return Json{{"rank", s.rank}, {"torsion", t}};
}

Structure structure_from_json(const Json& j) {
    Structure s;
    s.rank = j.at("rank").get<std::size_t>();
    for (const auto& d : j.at("torsion")) s.torsion.push_back(int_from_json(d));
    return s;
}

Json to_json(const Character& chi) {
    Json sup = Json::array();
    for (const auto& p : chi.support()) sup.push_back(p.to_string());
    return Json{{"m", chi.ring().m()}, {"support", sup}, {"unit_sign", chi.unit_sign()}};
}

Character character_from_json(const Json& j) {
    RingDesc ring = RingDesc::make(j.at("m").get<int>());
    std::vector<QuadInt> sup;
    for (const auto& p : j.at("support")) sup.push_back(QuadInt::parse(ring, p.get<std::string>()));
    return Character(ring, std::move(sup), j.value("unit_sign", 1));
}

Json to_json(const Move& mv) {
    Json j{{"kind", std::string(to_string(mv.kind))}};
    if (mv.ell) j["ell"] = mv.ell->to_string();
    if (mv.kind == MoveKind::ShiftStep) j["t"] = int_to_json(mv.t);
    if (mv.kind == MoveKind::PowerScale || mv.kind == MoveKind::ScaleByEll ||
        mv.kind == MoveKind::ScaleByOneMinusInvEll)
        j["exponent"] = mv.exponent;
    if (mv.chi_ell != 0) j["chi_ell"] = mv.chi_ell;
    if (mv.chi_one_minus_ell != 0) j["chi_one_minus_ell"] = mv.chi_one_minus_ell;
    return j;
}

Move move_from_json(const Json& j, RingDesc ring) {
    Move mv;
    mv.kind = parse_move_kind(j.at("kind").get<std::string>());
    if (j.contains("ell")) mv.ell = FieldElem::parse(ring, j.at("ell").get<std::string>());
    if (j.contains("t")) mv.t = int_from_json(j.at("t"));
    mv.exponent = j.value("exponent", 1);
    mv.chi_ell = j.value("chi_ell", 0);
    mv.chi_one_minus_ell = j.value("chi_one_minus_ell", 0);
    return mv;
}

Json to_json(const Certificate& c) {
    Json moves = Json::array();
    for (const auto& mv : c.moves) moves.push_back(to_json(mv));
    Json j{{"m", c.chi.ring().m()}, {"chi", to_json(c.chi)}, {"start", c.start.to_string()},
           {"moves", moves}};
    if (c.claims_zero) {
        j["claim"] = "zero";
    } else {
        j["claim"] = Json{{"end", c.end ? c.end->to_string() : std::string("?")}, {"sign", c.end_sign}};
    }
    if (c.uses_unit_ell) j["uses_unit_ell"] = true;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Character chi = character_from_json(j.at("chi"));
    RingDesc ring = chi.ring();
    if (j.contains("m") && j.at("m").get<int>() != ring.m())
        throw std::invalid_argument("certificate ring and character ring differ");
    Certificate c{chi, P1Point::parse(ring, j.at("start").get<std::string>()), {}, true, std::nullopt, 1, false, {}};
    for (const auto& mv : j.at("moves")) c.moves.push_back(move_from_json(mv, ring));
    const Json& claim = j.at("claim");
    if (claim.is_string()) {
        if (claim.get<std::string>() != "zero") throw std::invalid_argument("unknown claim");
    } else {
        c.claims_zero = false;
        c.end = P1Point::parse(ring, claim.at("end").get<std::string>());
        c.end_sign = claim.value("sign", 1);
    }
    c.uses_unit_ell = j.value("uses_unit_ell", false);
    return c;
}

}  // namespace scissors
