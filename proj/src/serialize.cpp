#include "parasurf/serialize.hpp"

#include <sstream>

#include "parasurf/errors.hpp"

namespace parasurf {

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (int m = 0; m <= std::max(p.degree(), 0); ++m)
        arr.push_back(rat_str(p.coeff(m)));
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array())
        throw DomainError("polynomial must be a JSON array of rationals");
    std::vector<Rat> coeffs;
    for (const auto& e : j) {
        if (e.is_number_integer())
            coeffs.push_back(Rat(e.get<long>()));
        else if (e.is_string())
            coeffs.push_back(rat_parse(e.get<std::string>()));
        else
            throw DomainError("polynomial coefficient must be an integer or a string");
    }
    return Poly(coeffs);
}

Json polyvec_to_json(const PolyVec& v) {
    return Json{{"x", poly_to_json(v.x)}, {"y", poly_to_json(v.y)}};
}

PolyVec polyvec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y"))
        throw DomainError("vector must be an object with \"x\" and \"y\" arrays");
    return PolyVec{poly_from_json(j.at("x")), poly_from_json(j.at("y"))};
}

Json polymatrix_to_json(const PolyMatrix& m) {
    return Json::array({poly_to_json(m.a), poly_to_json(m.b), poly_to_json(m.c),
                        poly_to_json(m.d)});
}

namespace {

Rat coeff_from_json(const Json& e) {
    if (e.is_number_integer()) return Rat(e.get<long>());
    if (e.is_string()) return rat_parse(e.get<std::string>());
    throw DomainError("coefficient must be an integer or a rational string");
}

long index_from_string(const std::string& s) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw DomainError("bad index");
        return v;
    } catch (const DomainError&) {
        throw;
    } catch (...) {
        throw DomainError("class index is not an integer: " + s);
    }
}

// One basis family: either a bare index or a {"index": coeff} map.
PolyVec family_from_json(const Json& j, PolyVec (*basis)(long)) {
    if (j.is_number_integer())
        return basis(j.get<long>());
    if (!j.is_object())
        throw DomainError("class entry must be an index or an index->coeff map");
    PolyVec acc;
    for (const auto& [key, val] : j.items())
        acc = acc + coeff_from_json(val) * basis(index_from_string(key));
    return acc;
}

PolyVec sigma_hvec_at(long j) { return sigma_class(j).hvec; }
PolyVec gamma_hvec_at(long j) { return gamma_class(j).hvec; }

} // namespace

PolyVec class_from_json(const Json& j) {
    if (!j.is_object())
        throw DomainError("class must be a JSON object");
    bool seen = false;
    PolyVec acc;
    if (j.contains("sigma")) {
        acc = acc + family_from_json(j.at("sigma"), &sigma_hvec_at);
        seen = true;
    }
    if (j.contains("gamma")) {
        acc = acc + family_from_json(j.at("gamma"), &gamma_hvec_at);
        seen = true;
    }
    if (j.contains("hvec")) {
        acc = acc + polyvec_from_json(j.at("hvec"));
        seen = true;
    }
    if (!seen)
        throw DomainError("class must specify \"sigma\", \"gamma\", or \"hvec\"");
    return acc;
}

Json class_to_json(const PolyVec& v) { return Json{{"hvec", polyvec_to_json(v)}}; }

Json connection_to_json(const SaddleConnection& s) {
    Json segs = Json::array();
    for (const Segment& seg : s.chain) {
        segs.push_back(Json{
            {"polygon", seg.sheet == Sheet::upper ? "upper" : "lower"},
            {"from", Json::array({rat_str(seg.from.x), rat_str(seg.from.y)})},
            {"to", Json::array({rat_str(seg.to.x), rat_str(seg.to.y)})},
        });
    }
    return Json{{"start", s.start_parity == 0 ? "s0" : "s1"},
                {"end", s.end_parity == 0 ? "s0" : "s1"},
                {"segments", segs},
                {"class", class_to_json(s.cls)}};
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::ostringstream out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << fields[i];
    }
    out << '\n';
    return out.str();
}

} // namespace parasurf
