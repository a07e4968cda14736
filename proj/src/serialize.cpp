#include "kinn/serialize.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kinn {

namespace {

using json = nlohmann::ordered_json;

void append_int_list(std::string& out, const std::vector<int>& xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    out += ']';
}

std::string serialize_impl(const Dissection& d, const Face* mark) {
    std::string out = "{\"n\":" + std::to_string(d.n()) + ",\"diagonals\":[";
    const auto& ds = d.diagonals();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i) out += ',';
        out += '[';
        out += std::to_string(ds[i].a);
        out += ',';
        out += std::to_string(ds[i].b);
        out += ']';
    }
    out += ']';
    if (mark) {
        out += ",\"marked_face\":";
        append_int_list(out, *mark);
    }
    out += '}';
    return out;
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw std::invalid_argument("parse error: " + where + " must be an integer");
    const auto v = j.get<long long>();
    if (v < 0 || v > 1'000'000'000)
        throw std::invalid_argument("parse error: " + where + " out of range");
    return static_cast<int>(v);
}

}  // namespace

std::string serialize(const Dissection& d) { return serialize_impl(d, nullptr); }

std::string serialize(const KInN& x) { return serialize_impl(x.dissection(), &x.marked_face()); }

std::variant<Dissection, KInN> parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("parse error: top level must be an object");

    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    const bool marked = keys.size() == 3;
    const std::vector<std::string> want =
        marked ? std::vector<std::string>{"n", "diagonals", "marked_face"}
               : std::vector<std::string>{"n", "diagonals"};
    if (keys != want)
        throw std::invalid_argument(
            "parse error: expected keys \"n\",\"diagonals\"[,\"marked_face\"] in canonical order");

    const int n = as_int(j["n"], "\"n\"");
    if (n < 3) throw std::invalid_argument("parse error: \"n\" must be at least 3");

    const json& diags = j["diagonals"];
    if (!diags.is_array()) throw std::invalid_argument("parse error: \"diagonals\" must be an array");
    std::vector<Diagonal> parsed;
    for (std::size_t i = 0; i < diags.size(); ++i) {
        const json& pair = diags[i];
        const std::string where = "\"diagonals\"[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("parse error: " + where + " must be a pair [a,b]");
        const int a = as_int(pair[0], where);
        const int b = as_int(pair[1], where);
        if (a >= b) throw std::invalid_argument("parse error: " + where + " must have a < b");
        if (b >= n) throw std::invalid_argument("parse error: " + where + " endpoint exceeds n-1");
        parsed.emplace_back(a, b);
        if (i > 0 && !(parsed[i - 1] < parsed[i]))
            throw std::invalid_argument("parse error: \"diagonals\" must be sorted lexicographically");
    }
    Dissection d(n, std::move(parsed));  // validates adjacency and crossings

    if (!marked) return d;

    const json& mf = j["marked_face"];
    if (!mf.is_array()) throw std::invalid_argument("parse error: \"marked_face\" must be an array");
    Face face;
    for (std::size_t i = 0; i < mf.size(); ++i) {
        face.push_back(as_int(mf[i], "\"marked_face\"[" + std::to_string(i) + "]"));
        if (i > 0 && face[i - 1] >= face[i])
            throw std::invalid_argument("parse error: \"marked_face\" must be in canonical rotation");
    }
    return KInN(std::move(d), std::move(face));
}

}  // namespace kinn
