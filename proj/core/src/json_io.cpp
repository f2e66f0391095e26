#include "helix/json_io.hpp"

#include <cctype>

#include <json.hpp>

namespace helix {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json chern_array(const ChernCharacter& v) {
    return ordered_json::array({v.ch0.str(), v.ch1.str(), v.ch2.str(), v.ch3.str()});
}

ChernCharacter chern_from_array(const ordered_json& arr) {
    if (!arr.is_array() || arr.size() != 4)
        throw ParseError("Chern character must be a 4-array of rational strings");
    auto coord = [&](int i) {
        const auto& x = arr[static_cast<size_t>(i)];
        if (x.is_string()) return Rational::parse(x.get<std::string>());
        if (x.is_number_integer()) return Rational(static_cast<long>(x.get<long long>()));
        throw ParseError("Chern coordinate must be a rational string");
    };
    return {coord(0), coord(1), coord(2), coord(3)};
}

// Serialize an integer that may exceed 64 bits: JSON number when it
// fits, decimal string otherwise.
ordered_json big_int(const Int& n) {
    if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
    return n.get_str();
}

Int big_int_from(const ordered_json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("expected an integer (number or decimal string)");
}

ordered_json resolution_json(const Resolution& r) {
    ordered_json out;
    out["sub"] = chern_array(r.sub);
    out["multiplicity"] = big_int(r.multiplicity);
    out["middle"] = chern_array(r.middle);
    out["quotient"] = chern_array(r.quotient);
    out["orientation"] =
        r.orientation == Resolution::Orientation::DefinesAsSub ? "sub" : "quotient";
    return out;
}

Resolution resolution_from(const ordered_json& j) {
    Resolution r;
    r.sub = chern_from_array(j.at("sub"));
    r.middle = chern_from_array(j.at("middle"));
    r.quotient = chern_from_array(j.at("quotient"));
    r.multiplicity = big_int_from(j.at("multiplicity"));
    const auto o = j.at("orientation").get<std::string>();
    if (o == "sub")
        r.orientation = Resolution::Orientation::DefinesAsSub;
    else if (o == "quotient")
        r.orientation = Resolution::Orientation::DefinesAsQuotient;
    else
        throw ParseError("bad orientation '" + o + "'");
    return r;
}

ordered_json parse_checked(std::string_view text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

ChernCharacter parse_chern(std::string_view text) {
    // Tuple form "(a,b,c,d)".
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (!t.empty() && t.front() == '(') {
        if (t.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
        t = t.substr(1, t.size() - 2);
        std::array<Rational, 4> coord;
        size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            const size_t comma = t.find(',', pos);
            if ((i < 3) == (comma == std::string_view::npos))
                throw ParseError("expected 4 comma-separated rationals in '" + std::string(text) + "'");
            auto piece = t.substr(pos, (i < 3 ? comma : t.size()) - pos);
            while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
            while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
            coord[static_cast<size_t>(i)] = Rational::parse(piece);
            pos = comma + 1;
        }
        return {coord[0], coord[1], coord[2], coord[3]};
    }
    return chern_from_array(parse_checked(text));
}

std::string chern_to_json(const ChernCharacter& v) { return chern_array(v).dump(); }

Foundation parse_foundation_json(std::string_view text) {
    const auto j = parse_checked(text);
    if (!j.is_array() || j.size() != 4)
        throw ParseError("foundation must be an array of four Chern characters");
    std::array<ChernCharacter, 4> e;
    for (int i = 0; i < 4; ++i) e[static_cast<size_t>(i)] = chern_from_array(j[static_cast<size_t>(i)]);
    return Foundation::make(std::move(e));
}

std::string foundation_to_json(const Foundation& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : f.entries()) arr.push_back(chern_array(v));
    return arr.dump();
}

std::string record_to_json(const BundleRecord& r) {
    ordered_json j;
    j["index"] = r.index.str();
    j["order"] = r.order;
    j["ch"] = chern_array(r.ch);
    j["rank"] = big_int(r.rank);
    j["slope"] = r.slope.str();
    j["c"] = ordered_json::array({big_int(r.c.c1), big_int(r.c.c2), big_int(r.c.c3)});
    j["chi"] = big_int(r.chi);
    j["wbn"] = {{"i", r.wbn.degree}, {"h", big_int(r.wbn.dim)}, {"conjectural", true}};
    j["gg"] = r.globally_generated;
    ordered_json fnd = ordered_json::array();
    for (const auto& v : r.foundation.entries()) fnd.push_back(chern_array(v));
    j["foundation"] = fnd;
    ordered_json fidx = ordered_json::array();
    for (const auto& t : r.foundation_indices) fidx.push_back(t.str());
    j["foundation_indices"] = fidx;
    j["mark"] = r.mark;
    ordered_json res = ordered_json::array();
    for (const auto& x : r.resolutions) res.push_back(resolution_json(x));
    j["resolutions"] = res;
    return j.dump(2) + "\n";
}

BundleRecord record_from_json(std::string_view text) {
    const auto j = parse_checked(text);
    BundleRecord r;
    r.index = ThreeAdic::parse(j.at("index").get<std::string>());
    r.order = j.at("order").get<unsigned>();
    r.ch = chern_from_array(j.at("ch"));
    r.rank = big_int_from(j.at("rank"));
    r.slope = Rational::parse(j.at("slope").get<std::string>());
    const auto& c = j.at("c");
    r.c = ChernClasses{big_int_from(c.at(0)), big_int_from(c.at(1)), big_int_from(c.at(2))};
    r.chi = big_int_from(j.at("chi"));
    r.wbn.degree = j.at("wbn").at("i").get<int>();
    r.wbn.dim = big_int_from(j.at("wbn").at("h"));
    r.globally_generated = j.at("gg").get<bool>();
    std::array<ChernCharacter, 4> e;
    for (int i = 0; i < 4; ++i)
        e[static_cast<size_t>(i)] = chern_from_array(j.at("foundation")[static_cast<size_t>(i)]);
    r.foundation = Foundation::unchecked(std::move(e));
    for (int i = 0; i < 4; ++i)
        r.foundation_indices[static_cast<size_t>(i)] =
            ThreeAdic::parse(j.at("foundation_indices")[static_cast<size_t>(i)].get<std::string>());
    r.mark = j.at("mark").get<int>();
    for (const auto& x : j.at("resolutions")) r.resolutions.push_back(resolution_from(x));
    return r;
}

std::string resolutions_to_json(const std::vector<Resolution>& res) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : res) arr.push_back(resolution_json(r));
    return arr.dump(2) + "\n";
}

std::string parents_to_json(const std::pair<ThreeAdic, ThreeAdic>& p) {
    ordered_json j;
    j["left"] = p.first.str();
    j["right"] = p.second.str();
    return j.dump() + "\n";
}

}  // namespace helix
